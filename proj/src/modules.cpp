#include "wca/modules.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace wca {

ModuleElement ModuleElement::basis(int rank, int i, const Poly& f) {
  ModuleElement m = zero(rank);
  m.coords[i] = f;
  return m;
}

bool ModuleElement::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  if (coords.size() < o.coords.size()) coords.resize(o.coords.size());
  for (std::size_t i = 0; i < o.coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  if (coords.size() < o.coords.size()) coords.resize(o.coords.size());
  for (std::size_t i = 0; i < o.coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

ModuleElement operator*(const Poly& f, const ModuleElement& m) {
  ModuleElement r = m;
  for (auto& c : r.coords) c = f * c;
  return r;
}

namespace {

Poly d() { return Poly::var(Var::D); }
Poly lam() { return Poly::var(Var::L); }

}  // namespace

FiniteModule make_module_unchecked(const ModuleSpec& spec) {
  FiniteModule M;
  M.spec_ = spec;
  switch (spec.kind) {
    case ModuleSpec::Kind::Standard:
      M.action_ = {{Poly(spec.alpha) + d() + spec.delta * lam()}};
      break;
    case ModuleSpec::Kind::Trivial:
      M.action_ = {{Poly()}};
      break;
    case ModuleSpec::Kind::Extension:
      // basis (u, w): v ∘_λ u = (λ+∂+α)u, v ∘_λ w = (λ+∂+β)w + γu
      M.action_ = {{lam() + d() + Poly(spec.alpha), Poly(spec.gamma)},
                   {Poly(), lam() + d() + Poly(spec.beta)}};
      break;
  }
  return M;
}

FiniteModule make_module(const ModuleSpec& spec) {
  FiniteModule M = make_module_unchecked(spec);
  for (int j = 0; j < M.rank(); ++j) {
    const ModuleElement defect = module_associativity_defect(ModuleElement::basis(M.rank(), j), M);
    if (!defect.is_zero())
      throw std::invalid_argument("module " + M.name() +
                                  " violates v ∘_λ (v ∘_μ m) = (v ∘_λ v) ∘_{λ+μ} m on basis vector " +
                                  std::to_string(j) + "; defect " + to_string(defect));
  }
  return M;
}

std::string FiniteModule::name() const {
  switch (spec_.kind) {
    case ModuleSpec::Kind::Standard:
      return "M(alpha=" + to_string(spec_.alpha) + ",delta=" + to_string(spec_.delta) + ")";
    case ModuleSpec::Kind::Trivial: return "trivial";
    case ModuleSpec::Kind::Extension:
      return "ext(alpha=" + to_string(spec_.alpha) + ",beta=" + to_string(spec_.beta) +
             ",gamma=" + to_string(spec_.gamma) + ")";
  }
  return "?";
}

ModuleSpec parse_module_spec(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("invalid module spec '" + std::string(text) + "': " + what);
  };
  if (s == "trivial") return ModuleSpec::trivial();
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') fail("expected NAME(key=value,...)");
  const std::string head = s.substr(0, open);
  std::map<std::string, Rational> args;
  std::string body = s.substr(open + 1, s.size() - open - 2);
  std::size_t start = 0;
  while (start < body.size()) {
    auto comma = body.find(',', start);
    if (comma == std::string::npos) comma = body.size();
    const std::string kv = body.substr(start, comma - start);
    const auto eq = kv.find('=');
    if (eq == std::string::npos) fail("expected key=value in '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    if (args.count(key)) fail("duplicate key '" + key + "'");
    args[key] = parse_rational(kv.substr(eq + 1));
    start = comma + 1;
  }
  auto take = [&](const std::string& key) {
    auto it = args.find(key);
    if (it == args.end()) fail("missing '" + key + "'");
    Rational v = it->second;
    args.erase(it);
    return v;
  };
  ModuleSpec spec;
  if (head == "m") {
    const Rational alpha = take("alpha");
    spec = ModuleSpec::standard(alpha, take("delta"));
  } else if (head == "ext") {
    const Rational alpha = take("alpha");
    const Rational beta = take("beta");
    spec = ModuleSpec::extension(alpha, beta, take("gamma"));
  } else {
    fail("unknown module family '" + head + "'");
  }
  if (!args.empty()) fail("unexpected key '" + args.begin()->first + "'");
  return spec;
}

Poly locality_compat_polynomial(const Rational& alpha, const Rational& delta) {
  const Poly base = Poly(alpha) + d();
  const Poly mu = Poly::var(Var::M);
  return (base + lam() + delta * (mu - lam())) * (base + delta * lam());
}

bool check_locality_compat(const Rational& alpha, const Rational& delta) {
  return locality_compat_polynomial(alpha, delta).degree(Var::L) < 2;
}

ModuleElement act_v(const ModuleElement& m, const FiniteModule& M, Var x) {
  const int r = M.rank();
  const Poly var = Poly::var(x);
  ModuleElement out = ModuleElement::zero(r);
  for (int j = 0; j < r && j < m.rank(); ++j) {
    if (m.coords[j].is_zero()) continue;
    const Poly shifted = shift(m.coords[j], Var::D, var);
    for (int i = 0; i < r; ++i) {
      const Poly& a = M.action(i, j);
      if (a.is_zero()) continue;
      out.coords[i] += shifted * (x == Var::L ? a : substitute(a, Var::L, var));
    }
  }
  return out;
}

ModuleElement act_v0(const ModuleElement& m, const FiniteModule& M) {
  const int r = M.rank();
  ModuleElement out = ModuleElement::zero(r);
  for (int j = 0; j < r && j < m.rank(); ++j) {
    if (m.coords[j].is_zero()) continue;
    for (int i = 0; i < r; ++i) {
      const Poly a0 = M.action(i, j).coefficient(Var::L, 0);
      if (!a0.is_zero()) out.coords[i] += m.coords[j] * a0;
    }
  }
  return out;
}

ModuleElement act_lambda(const ConformalElement& c, const ModuleElement& m, const FiniteModule& M) {
  const ModuleElement base = act_v(m, M, Var::L);
  std::map<int, ModuleElement> by_v_power;  // v^k ∘_λ m
  ModuleElement out = ModuleElement::zero(M.rank());
  for (const auto& [e, coeff] : c.poly().terms()) {
    const int a = e[static_cast<int>(Var::D)];
    const int k = e[static_cast<int>(Var::V)];
    auto it = by_v_power.find(k);
    if (it == by_v_power.end()) {
      ModuleElement x = base;
      for (int s = 1; s < k; ++s) x = act_v0(x, M);
      it = by_v_power.emplace(k, std::move(x)).first;
    }
    out += (Poly(coeff) * (-lam()).pow(a)) * it->second;
  }
  return out;
}

ModuleElement act_vn(int n, const ModuleElement& m, const FiniteModule& M) {
  if (n < 0) throw std::invalid_argument("act_vn: n must be nonnegative");
  const ModuleElement full = act_v(m, M, Var::L);
  ModuleElement out = ModuleElement::zero(M.rank());
  const Rational nf = factorial(n);
  for (int i = 0; i < M.rank(); ++i) out.coords[i] = full.coords[i].coefficient(Var::L, n) * nf;
  return out;
}

ModuleElement act_algebra(const AlgebraElement& x, const ModuleElement& m, const FiniteModule& M) {
  ModuleElement out = ModuleElement::zero(M.rank());
  std::map<int, ModuleElement> letter_images;  // v(n)·m
  for (const auto& [w, c] : x.terms()) {
    ModuleElement y;
    if (w.is_unit()) {
      y = m;
    } else {
      auto it = letter_images.find(w.tail);
      if (it == letter_images.end()) it = letter_images.emplace(w.tail, act_vn(w.tail, m, M)).first;
      y = it->second;
      for (int s = 0; s < w.zeros; ++s) y = act_v0(y, M);
    }
    out += Poly(c) * y;
  }
  return out;
}

ModuleElement module_derivation(const ModuleElement& m) {
  ModuleElement r = m;
  for (auto& c : r.coords) c = c.times_var(Var::D);
  return r;
}

ModuleElement module_associativity_defect(const ModuleElement& m, const FiniteModule& M) {
  // Left: v ∘_λ (v ∘_μ m); μ is a scalar for the outer action.
  const ModuleElement lhs = act_v(act_v(m, M, Var::M), M, Var::L);
  // Right: (v² + λ v) ∘_ν m with ν = λ + μ, where v² ∘_ν = v(0) (v ∘_ν ·).
  const Poly nu = lam() + Poly::var(Var::M);
  ModuleElement v_nu = act_v(m, M, Var::M);
  for (auto& c : v_nu.coords) c = substitute(c, Var::M, nu);
  ModuleElement rhs = act_v0(v_nu, M) + lam() * v_nu;
  return lhs - rhs;
}

std::string to_string(const ModuleElement& m, RenderOptions opts) {
  static const char* const kNames[] = {"u", "w"};
  std::string s;
  for (int i = 0; i < m.rank(); ++i) {
    if (m.coords[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    const std::string name = i < 2 ? kNames[i] : "e" + std::to_string(i + 1);
    s += "(" + to_string(m.coords[i], opts) + ")" + name;
  }
  return s.empty() ? "0" : s;
}

}  // namespace wca
