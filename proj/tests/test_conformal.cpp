#include "wca/conformal.hpp"

#include <doctest.h>

using namespace wca;

namespace {

const Poly d = Poly::var(Var::D);
const Poly v = Poly::var(Var::V);
const Poly l = Poly::var(Var::L);
const Poly mu = Poly::var(Var::M);

ConformalElement mono(int a, int k) { return ConformalElement::monomial(a, k); }
ConformalElement ce(const Poly& p) { return ConformalElement(p); }

}  // namespace

TEST_CASE("conformal elements reject λ and v-degree 0") {
  CHECK_THROWS_AS(ce(d), std::invalid_argument);
  CHECK_THROWS_AS(ce(l * v), std::invalid_argument);
  CHECK_NOTHROW(ce(d * v + v.pow(3)));
}

TEST_CASE("lambda_product examples") {
  CHECK(lambda_product(mono(0, 1), mono(0, 1)).poly() == v.pow(2) + l * v);
  CHECK(lambda_product(mono(0, 1), mono(0, 2)).poly() == v.pow(3) + 2 * l * v.pow(2) + l.pow(2) * v);
  CHECK(lambda_product(mono(1, 1), mono(0, 1)).poly() == -l * v.pow(2) - l.pow(2) * v);
}

TEST_CASE("n_product examples") {
  const ConformalElement x = mono(0, 1);
  CHECK(n_product(x, x, 0) == mono(0, 2));
  CHECK(n_product(x, x, 1) == mono(0, 1));
  CHECK(n_product(x, x, 2).is_zero());
  CHECK_THROWS_AS(n_product(x, x, -1), std::invalid_argument);
}

TEST_CASE("locality examples") {
  CHECK(locality(mono(0, 1), mono(0, 1)) == 2);
  CHECK(locality(mono(0, 1), mono(0, 2)) == 3);
  CHECK(locality(ConformalElement(), mono(0, 1)) == 0);
}

TEST_CASE("conformal commutator") {
  const ConformalElement x = mono(0, 1);
  CHECK(conf_commutator(x, x).poly() == (d + 2 * l) * v);
  // [v ∘_λ ∂v] = (∂+λ)[v ∘_λ v]
  CHECK(conf_commutator(x, x.apply_d()).poly() == (d + l) * conf_commutator(x, x).poly());
}

TEST_CASE("commutator antisymmetry [x∘λ y] = -[y∘_{-∂-λ} x]") {
  for (int a = 0; a <= 1; ++a)
    for (int k = 1; k <= 3; ++k)
      for (int c = 0; c <= 1; ++c)
        for (int m = 1; m <= 3; ++m) {
          const ConformalElement x = mono(a, k), y = mono(c, m);
          const Poly lhs = conf_commutator(x, y).poly();
          const Poly rhs = -substitute(conf_commutator(y, x).poly(), Var::L, -d - l);
          CHECK(lhs == rhs);
        }
}

TEST_CASE("check_associativity examples") {
  const ConformalElement x = mono(0, 1);
  CHECK(check_associativity(x, x, x));
  // Both sides expand to v³ + (2λ+μ)v² + (λ²+λμ)v.
  const Poly expected = v.pow(3) + (2 * l + mu) * v.pow(2) + (l.pow(2) + l * mu) * v;
  CHECK(associativity_lhs(x, x, x) == expected);
  CHECK(associativity_rhs(x, x, x) == expected);
  CHECK(check_associativity(mono(1, 1), x, x));
}

TEST_CASE("sesquilinearity C2 and C3") {
  for (int a = 0; a <= 2; ++a)
    for (int k = 1; k <= 3; ++k)
      for (int c = 0; c <= 2; ++c)
        for (int m = 1; m <= 3; ++m) {
          const ConformalElement x = mono(a, k), y = mono(c, m);
          const Poly xy = lambda_product(x, y).poly();
          CHECK(lambda_product(x.apply_d(), y).poly() == -l * xy);
          CHECK(lambda_product(x, y.apply_d()).poly() == (d + l) * xy);
        }
}

TEST_CASE("n-products reconstruct the λ-product") {
  for (int a = 0; a <= 2; ++a)
    for (int k = 1; k <= 3; ++k)
      for (int m = 1; m <= 3; ++m) {
        const ConformalElement x = mono(a, k) + mono(0, 1), y = mono(1, m);
        const LambdaPoly p = lambda_product(x, y);
        Poly rebuilt;
        for (int n = 0; n <= p.degree(); ++n) rebuilt += l.pow(n) * n_product(x, y, n).poly() * Rational(1 / factorial(n));
        CHECK(rebuilt == p.poly());
        CHECK(n_product(x, y, p.degree() + 1).is_zero());
        CHECK(locality(x, y) == p.degree() + 1);
      }
}

TEST_CASE("associativity on monomial triples") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int k = 1; k <= 2; ++k)
          for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n) CHECK(check_associativity(mono(a, k), mono(b, m), mono(c, n)));
}

TEST_CASE("rendering") {
  CHECK(to_string(mono(1, 2)) == "∂*v^2");
  CHECK(to_string(lambda_product(mono(0, 1), mono(0, 1))) == "v^2 + v*λ");
}
