#include "wca/coefficient_algebra.hpp"
#include "wca/modules.hpp"

#include <doctest.h>

#include <array>
#include <random>

using namespace wca;

namespace {

const Poly d = Poly::var(Var::D);
const Poly l = Poly::var(Var::L);

ModuleElement u(const Poly& f = Poly(1)) { return ModuleElement::basis(1, 0, f); }

Poly random_d_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  Poly f;
  for (int k = 0; k <= max_degree; ++k) f += Poly(Rational(coeff(rng))) * d.pow(k);
  return f;
}

ModuleElement random_element(std::mt19937_64& rng, int rank) {
  ModuleElement m = ModuleElement::zero(rank);
  for (auto& c : m.coords) c = random_d_poly(rng, 4);
  return m;
}

std::vector<FiniteModule> shipped() {
  return {make_module(ModuleSpec::standard(0, 1)),        make_module(ModuleSpec::standard(1, 1)),
          make_module(ModuleSpec::standard(Rational(-1, 2), 1)), make_module(ModuleSpec::standard(0, 0)),
          make_module(ModuleSpec::standard(Rational(3, 2), 0)),  make_module(ModuleSpec::trivial()),
          make_module(ModuleSpec::extension(0, 1, 1)),    make_module(ModuleSpec::extension(Rational(1, 2), -1, 3))};
}

// n!·[λⁿ] coordinate-wise.
ModuleElement lambda_coefficient(const ModuleElement& m, int n) {
  ModuleElement r = m;
  for (auto& c : r.coords) c = c.coefficient(Var::L, n) * factorial(n);
  return r;
}

}  // namespace

TEST_CASE("make_module accepts and rejects per the locality criterion") {
  CHECK_NOTHROW(make_module(ModuleSpec::standard(0, 1)));
  CHECK_THROWS_AS(make_module(ModuleSpec::standard(0, 2)), std::invalid_argument);
  CHECK_THROWS_AS(make_module(ModuleSpec::standard(1, Rational(1, 2))), std::invalid_argument);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) CHECK_NOTHROW(make_module(ModuleSpec::extension(a, b, a - b + 1)));
  try {
    make_module(ModuleSpec::standard(0, 2));
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("λ+μ") != std::string::npos);
  }
}

TEST_CASE("check_locality_compat examples") {
  CHECK(check_locality_compat(0, 1));
  CHECK(check_locality_compat(Rational(3, 2), 0));
  CHECK_FALSE(check_locality_compat(0, 2));
  for (int k = -3; k <= 3; ++k) {
    const Rational delta(k);
    const bool expected = delta == 0 || delta == 1;
    CHECK(check_locality_compat(5, delta) == expected);
    bool built = true;
    try {
      make_module(ModuleSpec::standard(5, delta));
    } catch (const std::invalid_argument&) {
      built = false;
    }
    CHECK(built == expected);
  }
}

TEST_CASE("action matrices") {
  const FiniteModule M = make_module(ModuleSpec::standard(Rational(2, 3), 1));
  CHECK(M.rank() == 1);
  CHECK(M.action(0, 0) == Poly(Rational(2, 3)) + d + l);
  const FiniteModule T = make_module(ModuleSpec::trivial());
  CHECK(T.action(0, 0).is_zero());
  const FiniteModule E = make_module(ModuleSpec::extension(1, 2, 3));
  CHECK(E.rank() == 2);
  CHECK(E.action(0, 0) == l + d + 1);
  CHECK(E.action(1, 1) == l + d + 2);
  CHECK(E.action(0, 1) == Poly(3));
  CHECK(E.action(1, 0).is_zero());
}

TEST_CASE("act_lambda examples") {
  const Rational a(5, 2);
  const FiniteModule M = make_module(ModuleSpec::standard(a, 1));
  const Poly A = Poly(a);
  CHECK(act_lambda(ConformalElement::monomial(0, 1), u(), M) == u(A + d + l));
  CHECK(act_lambda(ConformalElement::monomial(0, 2), u(), M) == u((d + A) * (l + d + A)));
  CHECK(act_lambda(ConformalElement::monomial(0, 1), u(d), M) == u((d + l) * (A + d + l)));
}

TEST_CASE("act_lambda matches the closed formula on M(α,1)") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const Rational& a : {Rational(0), Rational(1), Rational(-7, 3)}) {
    const FiniteModule M = make_module(ModuleSpec::standard(a, 1));
    const Poly A = Poly(a);
    for (int s = 0; s < 20; ++s) {
      const Poly f = random_d_poly(rng, 3);
      // c = v·h(∂, v); the formula gives h(−λ, ∂+α)(λ+∂+α) f(∂+λ).
      ConformalElement c;
      Poly h_sub;
      for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
          const Rational k(coeff(rng));
          if (k == 0) continue;
          c += ConformalElement::monomial(i, j + 1, k);
          h_sub += k * (-l).pow(i) * (d + A).pow(j);
        }
      const Poly expected = h_sub * (l + d + A) * shift(f, Var::D, l);
      CHECK(act_lambda(c, u(f), M) == u(expected));
    }
  }
}

TEST_CASE("act_vn examples") {
  const Rational a(4);
  const FiniteModule M = make_module(ModuleSpec::standard(a, 1));
  CHECK(act_vn(0, u(), M) == u(d + a));
  CHECK(act_vn(1, u(), M) == u());
  CHECK(act_vn(2, u(d.pow(2)), M) == u(6 * d + Rational(2 * a)));
  CHECK(act_vn(5, u(d), M).is_zero());
}

TEST_CASE("act_vn follows the derivative rule on M(α,1)") {
  // v(n)·f u = (∂+α) f⁽ⁿ⁾ u + n f⁽ⁿ⁻¹⁾ u
  std::mt19937_64 rng(4);
  const Rational a(-3, 5);
  const FiniteModule M = make_module(ModuleSpec::standard(a, 1));
  for (int s = 0; s < 30; ++s) {
    const Poly f = random_d_poly(rng, 5);
    for (int n = 0; n <= 6; ++n) {
      Poly expected = (d + a) * derivative(f, Var::D, n);
      if (n > 0) expected += n * derivative(f, Var::D, n - 1);
      CHECK(act_vn(n, u(f), M) == u(expected));
    }
  }
}

TEST_CASE("module_derivation") {
  CHECK(module_derivation(u(d + 1)) == u(d.pow(2) + d));
  CHECK(module_derivation(u()) == u(d));
}

TEST_CASE("∂ compatibility with coefficient actions") {
  std::mt19937_64 rng(8);
  for (const FiniteModule& M : shipped())
    for (int s = 0; s < 5; ++s) {
      const ModuleElement m = random_element(rng, M.rank());
      for (int n = 0; n <= 5; ++n) {
        ModuleElement rhs = act_vn(n, module_derivation(m), M);
        if (n > 0) rhs -= Poly(n) * act_vn(n - 1, m, M);
        CHECK(module_derivation(act_vn(n, m, M)) == rhs);
      }
    }
}

TEST_CASE("module associativity for shipped modules") {
  std::mt19937_64 rng(12);
  for (const FiniteModule& M : shipped())
    for (int s = 0; s < 10; ++s) CHECK(module_associativity_defect(random_element(rng, M.rank()), M).is_zero());
}

TEST_CASE("associativity defect is nonzero for M(0,2)") {
  const FiniteModule bad = make_module_unchecked(ModuleSpec::standard(0, 2));
  CHECK_FALSE(module_associativity_defect(u(), bad).is_zero());
}

TEST_CASE("coefficient action agrees with the λ-action") {
  std::mt19937_64 rng(31);
  for (const FiniteModule& M : shipped()) {
    const ModuleElement m = random_element(rng, M.rank());
    for (int a = 0; a <= 1; ++a)
      for (int k = 1; k <= 3; ++k) {
        const ConformalElement c = ConformalElement::monomial(a, k);
        const ModuleElement lam = act_lambda(c, m, M);
        for (int n = 0; n <= 4; ++n) CHECK(act_algebra(coeff_image(c, n), m, M) == lambda_coefficient(lam, n));
      }
  }
}

TEST_CASE("act_algebra on words and scalars") {
  const FiniteModule M = make_module(ModuleSpec::standard(2, 1));
  const ModuleElement m = u(d.pow(2) + 1);
  CHECK(act_algebra(AlgebraElement(3), m, M) == Poly(3) * m);
  // v(0)v(2)·m = v(0)·(v(2)·m)
  CHECK(act_algebra(AlgebraElement::word(NormalWord{1, 2}), m, M) == act_vn(0, act_vn(2, m, M), M));
  // Λ-multiplication is compatible with the action.
  const AlgebraElement x = AlgebraElement::letter(2), y = AlgebraElement::letter(1);
  CHECK(act_algebra(x * y, m, M) == act_algebra(x, act_algebra(y, m, M), M));
}

TEST_CASE("extension: u spans a submodule with quotient M(β,1)") {
  std::mt19937_64 rng(41);
  const std::vector<std::array<Rational, 3>> params = {
      std::array<Rational, 3>{0, 1, 1}, std::array<Rational, 3>{Rational(1, 2), -1, 3}, std::array<Rational, 3>{2, 2, -5}};
  for (const auto& [a, b, g] : params) {
    const FiniteModule E = make_module(ModuleSpec::extension(a, b, g));
    const FiniteModule Q = make_module(ModuleSpec::standard(b, 1));
    for (int s = 0; s < 5; ++s) {
      const Poly f = random_d_poly(rng, 3), h = random_d_poly(rng, 3);
      for (int n = 0; n <= 4; ++n) {
        CHECK(act_vn(n, ModuleElement({f, Poly()}), E).coords[1].is_zero());
        CHECK(act_vn(n, ModuleElement({h, f}), E).coords[1] == act_vn(n, u(f), Q).coords[0]);
      }
    }
  }
}

TEST_CASE("module spec parsing") {
  const ModuleSpec s = parse_module_spec("M(alpha=1/2, delta=1)");
  CHECK(s.kind == ModuleSpec::Kind::Standard);
  CHECK(s.alpha == Rational(1, 2));
  CHECK(s.delta == 1);
  CHECK(parse_module_spec("trivial").kind == ModuleSpec::Kind::Trivial);
  const ModuleSpec e = parse_module_spec("ext(alpha=0,beta=1,gamma=-2)");
  CHECK(e.kind == ModuleSpec::Kind::Extension);
  CHECK(e.gamma == -2);
  CHECK(make_module(parse_module_spec("m(ALPHA=0,delta=1)")).name() == "M(alpha=0,delta=1)");
  CHECK(make_module(e).name() == "ext(alpha=0,beta=1,gamma=-2)");
  CHECK_THROWS_AS(parse_module_spec("M(alpha=0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_module_spec("M(alpha=0,alpha=1,delta=1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_module_spec("M(alpha=0,delta=1,beta=2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_module_spec("N(alpha=0,delta=1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_module_spec("M(alpha=x,delta=1)"), std::invalid_argument);
}

TEST_CASE("module element rendering") {
  CHECK(to_string(u(d + 1)) == "(∂ + 1)u");
  CHECK(to_string(ModuleElement({Poly(2), d})) == "(2)u + (∂)w");
}
