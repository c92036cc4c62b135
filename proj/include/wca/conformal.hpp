// The Weyl associative conformal algebra U(2) = k[∂, v] v with
//   (∂^a v^n ∘_λ ∂^c v^m) = (-λ)^a (∂+λ)^c v^n (v+λ)^m.
#pragma once

#include "wca/poly.hpp"

#include <string>

namespace wca {

/// Element of U(2): a polynomial in ∂, v with every monomial of v-degree >= 1.
class ConformalElement {
 public:
  ConformalElement() = default;
  /// Throws std::invalid_argument if p mentions λ, μ or has a monomial of
  /// v-degree 0.
  explicit ConformalElement(Poly p);

  static ConformalElement monomial(int d_power, int v_power, const Rational& c = 1);

  const Poly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  ConformalElement& operator+=(const ConformalElement& o);
  friend ConformalElement operator+(ConformalElement a, const ConformalElement& b) { return a += b; }
  friend ConformalElement operator-(const ConformalElement& a, const ConformalElement& b);
  friend ConformalElement operator*(const Rational& c, const ConformalElement& a);
  /// The H-module action: multiplication by ∂.
  ConformalElement apply_d() const;
  friend bool operator==(const ConformalElement&, const ConformalElement&) = default;

 private:
  Poly poly_;
};

/// Polynomial in λ with coefficients in U(2), stored as one Poly in ∂, v, λ.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  explicit LambdaPoly(Poly p) : poly_(std::move(p)) {}

  const Poly& poly() const { return poly_; }
  /// λ-degree; -1 for zero.
  int degree() const { return poly_.degree(Var::L); }
  ConformalElement coefficient(int k) const;
  bool is_zero() const { return poly_.is_zero(); }
  friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

 private:
  Poly poly_;
};

LambdaPoly lambda_product(const ConformalElement& a, const ConformalElement& b);

/// (a ∘_n b) = n! [λ^n] (a ∘_λ b).
ConformalElement n_product(const ConformalElement& a, const ConformalElement& b, int n);

/// Least N with (a ∘_n b) = 0 for all n >= N.
int locality(const ConformalElement& a, const ConformalElement& b);

/// [a ∘_λ b] = (a ∘_λ b) - (b ∘_{-∂-λ} a). The substitution expands powers of
/// (-∂-λ) and multiplies them into the coefficients; since ∂ acts on U(2) by
/// multiplication this is plain polynomial substitution μ -> -∂-λ.
LambdaPoly conf_commutator(const ConformalElement& a, const ConformalElement& b);

/// a ∘_λ (b ∘_μ c) as a polynomial in ∂, v, λ, μ.
Poly associativity_lhs(const ConformalElement& a, const ConformalElement& b, const ConformalElement& c);
/// (a ∘_λ b) ∘_{λ+μ} c as a polynomial in ∂, v, λ, μ.
Poly associativity_rhs(const ConformalElement& a, const ConformalElement& b, const ConformalElement& c);
bool check_associativity(const ConformalElement& a, const ConformalElement& b, const ConformalElement& c);

std::string to_string(const ConformalElement& a);
std::string to_string(const LambdaPoly& p);

}  // namespace wca
