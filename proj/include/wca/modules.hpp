// Finite free conformal modules over U(2). A module of rank r is k[∂]^r with
// the λ-action of the generator v given by an r×r matrix A(∂, λ):
//   v ∘_λ f(∂) e_j = f(∂+λ) Σ_i A_ij(∂, λ) e_i.
#pragma once

#include "wca/coefficient_algebra.hpp"
#include "wca/conformal.hpp"
#include "wca/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace wca {

/// Vector of polynomials; module elements proper use only ∂, λ-expansions of
/// the action may also carry λ and μ.
struct ModuleElement {
  std::vector<Poly> coords;

  ModuleElement() = default;
  explicit ModuleElement(std::vector<Poly> c) : coords(std::move(c)) {}
  static ModuleElement zero(int rank) { return ModuleElement(std::vector<Poly>(static_cast<std::size_t>(rank))); }
  static ModuleElement basis(int rank, int i, const Poly& f = Poly(1));

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(const Poly& f, const ModuleElement& m);
  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
};

struct ModuleSpec {
  enum class Kind { Standard, Trivial, Extension };
  Kind kind = Kind::Standard;
  Rational alpha = 0;
  Rational delta = 1;  // Standard only
  Rational beta = 0;   // Extension only
  Rational gamma = 0;  // Extension only

  static ModuleSpec standard(const Rational& alpha, const Rational& delta) {
    return {Kind::Standard, alpha, delta, 0, 0};
  }
  static ModuleSpec trivial() { return {Kind::Trivial, 0, 0, 0, 0}; }
  static ModuleSpec extension(const Rational& alpha, const Rational& beta, const Rational& gamma) {
    return {Kind::Extension, alpha, 0, beta, gamma};
  }
};

class FiniteModule {
 public:
  int rank() const { return static_cast<int>(action_.size()); }
  /// Coefficient of e_i in v ∘_λ e_j, a polynomial in ∂, λ.
  const Poly& action(int i, int j) const { return action_[i][j]; }
  const ModuleSpec& spec() const { return spec_; }
  /// Canonical spec string, e.g. "M(alpha=0,delta=1)".
  std::string name() const;

 private:
  friend FiniteModule make_module(const ModuleSpec& spec);
  friend FiniteModule make_module_unchecked(const ModuleSpec& spec);
  ModuleSpec spec_;
  std::vector<std::vector<Poly>> action_;
};

/// Builds the module and validates v ∘_λ (v ∘_μ m) = (v ∘_λ v) ∘_{λ+μ} m on
/// the basis. Throws std::invalid_argument naming the failed identity.
FiniteModule make_module(const ModuleSpec& spec);
/// No validation; used to inspect modules that fail the axioms.
FiniteModule make_module_unchecked(const ModuleSpec& spec);

/// "M(alpha=0,delta=1)", "trivial", "ext(alpha=0,beta=1,gamma=1)".
/// Throws std::invalid_argument.
ModuleSpec parse_module_spec(std::string_view text);

/// Degree in λ of (α+∂+λ+Δ(μ-λ))(α+∂+Δλ) is below 2.
bool check_locality_compat(const Rational& alpha, const Rational& delta);
Poly locality_compat_polynomial(const Rational& alpha, const Rational& delta);

/// v ∘_x m where x is the formal variable to use (λ or μ).
ModuleElement act_v(const ModuleElement& m, const FiniteModule& M, Var x = Var::L);

/// v(0)·m, i.e. v ∘_λ m at λ = 0 (λ-free coefficients of m are treated as
/// constants).
ModuleElement act_v0(const ModuleElement& m, const FiniteModule& M);

/// c ∘_λ m for c ∈ U(2): (∂^a v^k) ∘_λ m = (-λ)^a v(0)^{k-1} (v ∘_λ m).
ModuleElement act_lambda(const ConformalElement& c, const ModuleElement& m, const FiniteModule& M);

/// v(n)·m = n! [λ^n] (v ∘_λ m).
ModuleElement act_vn(int n, const ModuleElement& m, const FiniteModule& M);

/// Action of Λ: words act letter by letter from the right, the unit as the
/// identity.
ModuleElement act_algebra(const AlgebraElement& x, const ModuleElement& m, const FiniteModule& M);

/// ∂·m.
ModuleElement module_derivation(const ModuleElement& m);

/// v ∘_λ (v ∘_μ m) - (v ∘_λ v) ∘_{λ+μ} m; zero for valid modules.
ModuleElement module_associativity_defect(const ModuleElement& m, const FiniteModule& M);

std::string to_string(const ModuleElement& m, RenderOptions opts = {});

}  // namespace wca
