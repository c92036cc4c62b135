// Sparse multivariate polynomials over the rationals in the fixed
// indeterminates ∂ < v < λ < μ.
#pragma once

#include "wca/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace wca {

enum class Var : int { D = 0, V = 1, L = 2, M = 3 };
inline constexpr int kNumVars = 4;

class Poly {
 public:
  using Exponent = std::array<int, kNumVars>;
  using Terms = std::map<Exponent, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT

  static Poly var(Var x, int power = 1);
  static Poly monomial(const Rational& c, const Exponent& e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// Highest power of x; -1 for the zero polynomial.
  int degree(Var x) const;
  int total_degree() const;
  bool contains(Var x) const { return degree(x) > 0; }

  /// Coefficient of x^k as a polynomial free of x.
  Poly coefficient(Var x, int k) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(Poly a, int c) { return a *= Rational(c); }
  friend Poly operator*(int c, Poly a) { return a *= Rational(c); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(int k) const;
  /// Multiplies by x^k.
  Poly times_var(Var x, int k = 1) const;

  void add_term(const Exponent& e, const Rational& c);

 private:
  Terms terms_;
};

/// k-fold formal derivative in x.
Poly derivative(const Poly& f, Var x, int k = 1);

/// Simultaneous substitution x -> replacement. The replacement may mention x.
Poly substitute(const Poly& f, Var x, const Poly& replacement);

/// f with x replaced by x + offset. Throws std::invalid_argument if offset
/// mentions x.
Poly shift(const Poly& f, Var x, const Poly& offset);

/// For f univariate in ∂: c = f(0) and g = (f - c)/∂, so f = c + ∂ g.
/// Throws std::invalid_argument if f mentions another variable.
std::pair<Rational, Poly> split_constant(const Poly& f);

struct RenderOptions {
  bool ascii = false;
};
std::string to_string(const Poly& f, RenderOptions opts = {});

/// Accepts sums of products of rationals, variables (∂ λ μ v or ASCII d l m v),
/// powers with '^', and parentheses. Throws std::invalid_argument.
Poly parse_poly(std::string_view text);

std::string_view var_symbol(Var x, bool ascii = false);

}  // namespace wca
