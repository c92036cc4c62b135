#include "wca/conformal.hpp"

#include <stdexcept>

namespace wca {

namespace {

void validate(const Poly& p) {
  for (const auto& [e, c] : p.terms()) {
    if (e[static_cast<int>(Var::L)] || e[static_cast<int>(Var::M)])
      throw std::invalid_argument("conformal element must be a polynomial in ∂ and v: " + to_string(p));
    if (e[static_cast<int>(Var::V)] < 1)
      throw std::invalid_argument("conformal element has a monomial of v-degree 0: " + to_string(p));
  }
}

const Poly& lam() {
  static const Poly p = Poly::var(Var::L);
  return p;
}

}  // namespace

ConformalElement::ConformalElement(Poly p) : poly_(std::move(p)) { validate(poly_); }

ConformalElement ConformalElement::monomial(int d_power, int v_power, const Rational& c) {
  Poly::Exponent e{};
  e[static_cast<int>(Var::D)] = d_power;
  e[static_cast<int>(Var::V)] = v_power;
  return ConformalElement(Poly::monomial(c, e));
}

ConformalElement& ConformalElement::operator+=(const ConformalElement& o) {
  poly_ += o.poly_;
  return *this;
}

ConformalElement operator-(const ConformalElement& a, const ConformalElement& b) {
  ConformalElement r;
  r.poly_ = a.poly_ - b.poly_;
  return r;
}

ConformalElement operator*(const Rational& c, const ConformalElement& a) {
  ConformalElement r;
  r.poly_ = a.poly_ * c;
  return r;
}

ConformalElement ConformalElement::apply_d() const {
  ConformalElement r;
  r.poly_ = poly_.times_var(Var::D);
  return r;
}

ConformalElement LambdaPoly::coefficient(int k) const { return ConformalElement(poly_.coefficient(Var::L, k)); }

LambdaPoly lambda_product(const ConformalElement& a, const ConformalElement& b) {
  const Poly d_plus_l = Poly::var(Var::D) + lam();
  const Poly v_plus_l = Poly::var(Var::V) + lam();
  const Poly minus_l = -lam();
  Poly out;
  for (const auto& [ea, ca] : a.poly().terms()) {
    const int p = ea[static_cast<int>(Var::D)];
    const int n = ea[static_cast<int>(Var::V)];
    for (const auto& [eb, cb] : b.poly().terms()) {
      const int q = eb[static_cast<int>(Var::D)];
      const int m = eb[static_cast<int>(Var::V)];
      Poly t = minus_l.pow(p) * d_plus_l.pow(q) * v_plus_l.pow(m);
      out += t.times_var(Var::V, n) * (ca * cb);
    }
  }
  return LambdaPoly(std::move(out));
}

ConformalElement n_product(const ConformalElement& a, const ConformalElement& b, int n) {
  if (n < 0) throw std::invalid_argument("n_product: n must be nonnegative");
  return factorial(n) * lambda_product(a, b).coefficient(n);
}

int locality(const ConformalElement& a, const ConformalElement& b) { return lambda_product(a, b).degree() + 1; }

LambdaPoly conf_commutator(const ConformalElement& a, const ConformalElement& b) {
  const Poly reversed = lambda_product(b, a).poly();
  const Poly substituted = substitute(reversed, Var::L, -Poly::var(Var::D) - lam());
  return LambdaPoly(lambda_product(a, b).poly() - substituted);
}

Poly associativity_lhs(const ConformalElement& a, const ConformalElement& b, const ConformalElement& c) {
  // b ∘_μ c = Σ μ^k c_k, and a ∘_λ (μ^k c_k) = μ^k (a ∘_λ c_k).
  const LambdaPoly inner = lambda_product(b, c);
  Poly out;
  for (int k = 0; k <= inner.degree(); ++k) {
    const ConformalElement ck = inner.coefficient(k);
    if (ck.is_zero()) continue;
    out += lambda_product(a, ck).poly().times_var(Var::M, k);
  }
  return out;
}

Poly associativity_rhs(const ConformalElement& a, const ConformalElement& b, const ConformalElement& c) {
  // (Σ λ^j d_j) ∘_{λ+μ} c = Σ λ^j (d_j ∘_{λ+μ} c).
  const LambdaPoly inner = lambda_product(a, b);
  const Poly l_plus_m = lam() + Poly::var(Var::M);
  Poly out;
  for (int j = 0; j <= inner.degree(); ++j) {
    const ConformalElement dj = inner.coefficient(j);
    if (dj.is_zero()) continue;
    out += substitute(lambda_product(dj, c).poly(), Var::L, l_plus_m).times_var(Var::L, j);
  }
  return out;
}

bool check_associativity(const ConformalElement& a, const ConformalElement& b, const ConformalElement& c) {
  return associativity_lhs(a, b, c) == associativity_rhs(a, b, c);
}

std::string to_string(const ConformalElement& a) { return to_string(a.poly()); }
std::string to_string(const LambdaPoly& p) { return to_string(p.poly()); }

}  // namespace wca
