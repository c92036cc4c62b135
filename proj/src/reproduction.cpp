#include "wca/reproduction.hpp"

#include "wca/conformal.hpp"
#include "wca/modules.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace wca {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Rational sign(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

bool valid(const std::vector<int>& idx) {
  if (idx.empty()) return true;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] < 1) return false;
  return idx.back() >= 0;
}

void add(ChainCombination& out, const AlgebraElement& c, std::vector<int> idx) {
  if (valid(idx)) out.add_term(AnickChain{std::move(idx)}, c);
}

AlgebraElement letter(int n) { return AlgebraElement::letter(n); }

// idx with positions j, j+1 (0-based) replaced by their sum plus `shift`.
std::vector<int> merged(const std::vector<int>& idx, std::size_t j, int shift) {
  std::vector<int> out(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(j));
  out.push_back(idx[j] + idx[j + 1] + shift);
  out.insert(out.end(), idx.begin() + static_cast<std::ptrdiff_t>(j) + 2, idx.end());
  return out;
}

// Coefficients c_y of ∇s(x) = Σ c_y s(y) for M(α,1).
std::map<std::vector<int>, Rational> nabla_terms(const std::vector<int>& x, const Rational& alpha) {
  std::map<std::vector<int>, Rational> terms;
  auto put = [&](std::vector<int> y, const Rational& c) {
    if (is_zero(c) || !valid(y)) return;
    terms[std::move(y)] += c;
  };
  const int N = static_cast<int>(x.size());
  // 1-based j in the comments, 0-based positions in code.
  for (int j = 1; j <= N - 1; ++j) put(merged(x, j - 1, 0), sign(j) * alpha);
  for (int j = 3; j <= N; ++j)
    for (int k = 1; k <= j - 2; ++k) {
      std::vector<int> y = x;
      y[j - 1] -= 1;
      put(merged(y, k - 1, 0), sign(k + 1) * x[j - 1]);
    }
  for (int j = 1; j <= N - 1; ++j) put(merged(x, j - 1, -1), sign(j + 1) * x[j]);
  return terms;
}

}  // namespace

ChainCombination delta2_formula(int n, int m) {
  ChainCombination out;
  add(out, letter(n), {m});
  add(out, -letter(0), {n + m});
  add(out, AlgebraElement(Rational(-n)), {n + m - 1});
  return out;
}

ChainCombination delta3_formula(int n, int m, int p) {
  ChainCombination out;
  add(out, letter(n), {m, p});
  add(out, AlgebraElement(Rational(-n)), {n + m - 1, p});
  add(out, -letter(0), {n + m, p});
  add(out, letter(0), {n, m + p});
  add(out, AlgebraElement(Rational(n)), {n - 1, m + p});
  add(out, AlgebraElement(Rational(m)), {n, m + p - 1});
  return out;
}

Rational nabla_formula_entry(const std::vector<int>& x, const Rational& alpha,
                             const std::function<Rational(const std::vector<int>&)>& s) {
  Rational total = 0;
  for (const auto& [y, c] : nabla_terms(x, alpha)) total += c * s(y);
  return total;
}

RationalMatrix nabla_formula_matrix(int d, const Rational& alpha, int W) {
  const std::vector<AnickChain> cols = window_chains(d, W);
  const std::vector<AnickChain> rows = window_chains(d + 1, W);
  std::map<std::vector<int>, int> col_index;
  for (std::size_t k = 0; k < cols.size(); ++k) col_index[cols[k].idx] = static_cast<int>(k);
  RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [y, c] : nabla_terms(rows[r].idx, alpha)) {
      auto it = col_index.find(y);
      if (it != col_index.end()) m.at(static_cast<int>(r), it->second) += c;
    }
  return m;
}

// ---------------------------------------------------------------------------

namespace {

struct Recorder {
  CheckReport& rep;
  void check(bool ok, const std::function<std::string()>& describe) {
    ++rep.cases;
    if (ok) return;
    ++rep.failures;
    if (rep.examples.size() < 5) rep.examples.push_back(describe());
  }
};

std::vector<ModuleSpec> shipped_modules() {
  return {ModuleSpec::standard(0, 1),  ModuleSpec::standard(1, 1),       ModuleSpec::standard(Rational(-1, 2), 1),
          ModuleSpec::standard(0, 0),  ModuleSpec::standard(Rational(3, 2), 0), ModuleSpec::trivial(),
          ModuleSpec::extension(0, 1, 1), ModuleSpec::extension(Rational(1, 2), -1, 3)};
}

ModuleElement random_element(int rank, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  ModuleElement m = ModuleElement::zero(rank);
  for (auto& p : m.coords)
    for (int k = 0; k <= max_degree; ++k) p += Poly(Rational(coeff(rng))) * Poly::var(Var::D, k);
  return m;
}

Cochain random_cochain(int degree, int rank, int W, std::mt19937_64& rng) {
  Cochain phi{degree, {}};
  for (const AnickChain& c : window_chains(degree, W)) phi.set(c, random_element(rank, 2, rng));
  return phi;
}

void suite_confluence(const CheckOptions& o, Recorder& rec) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> length(1, 6), index(0, 8);
  for (int s = 0; s < o.samples; ++s) {
    RawWord w(static_cast<std::size_t>(length(rng)));
    for (int& n : w) n = index(rng);
    const AlgebraElement left = normal_form(w, RewriteOrder::Leftmost, 0);
    const AlgebraElement right = normal_form(w, RewriteOrder::Rightmost, 0);
    const AlgebraElement random = normal_form(w, RewriteOrder::Random, o.seed + static_cast<std::uint64_t>(s));
    const AlgebraElement fast = normal_form(w);
    rec.check(left == right && left == random && left == fast,
              [&] { return to_string(w) + ": " + to_string(left) + " vs " + to_string(right); });
  }
}

void suite_delta_squared(const CheckOptions& o, Recorder& rec) {
  const MorseResolution& R = u2_resolution();
  for (int d = 2; d <= o.max_degree; ++d)
    for (const AnickChain& x : window_chains(d, o.max_sum)) {
      const ChainCombination dd = R.delta(R.delta(x));
      rec.check(dd.is_zero(), [&] { return "δδ" + to_string(x) + " = " + to_string(dd); });
    }
}

void suite_morse_vs_closed(const CheckOptions& o, Recorder& rec) {
  for (int d = 1; d <= o.max_degree; ++d)
    for (const AnickChain& x : window_chains(d, o.max_sum)) {
      const ChainCombination a = anick_delta_morse(x);
      const ChainCombination b = anick_delta_closed(x);
      rec.check(a == b, [&] { return to_string(x) + ": " + to_string(a) + " vs " + to_string(b); });
    }
}

void suite_delta_formulas(const CheckOptions& o, Recorder& rec) {
  for (const AnickChain& x : window_chains(2, o.max_sum)) {
    const ChainCombination f = delta2_formula(x.idx[0], x.idx[1]);
    rec.check(anick_delta_closed(x) == f && anick_delta_morse(x) == f,
              [&] { return to_string(x) + ": expected " + to_string(f); });
  }
  for (const AnickChain& x : window_chains(3, o.max_sum)) {
    const ChainCombination f = delta3_formula(x.idx[0], x.idx[1], x.idx[2]);
    rec.check(anick_delta_closed(x) == f && anick_delta_morse(x) == f,
              [&] { return to_string(x) + ": expected " + to_string(f); });
  }
}

void suite_homotopy(const CheckOptions& o, Recorder& rec) {
  const MorseResolution& R = u2_resolution();
  for (int d = 1; d <= o.max_degree; ++d)
    for (const AnickChain& x : window_chains(d, o.max_sum)) {
      const BarCombination g = R.homotopy_g(x);
      const ChainCombination fdg = R.homotopy_f(bar_differential(g));
      rec.check(fdg == R.delta(x), [&] { return "f d g" + to_string(x) + " = " + to_string(fdg); });
      const ChainCombination fg = R.homotopy_f(g);
      rec.check(fg == ChainCombination::single(x), [&] { return "f g" + to_string(x) + " = " + to_string(fg); });
    }
}

// Monomials ∂^a v^k with a <= 2 and 1 <= k <= max_v.
std::vector<ConformalElement> monomials(int max_v) {
  std::vector<ConformalElement> out;
  for (int k = 1; k <= max_v; ++k)
    for (int a = 0; a <= 2; ++a) out.push_back(ConformalElement::monomial(a, k));
  return out;
}

int v_degree(const ConformalElement& c) { return c.poly().degree(Var::V); }

void suite_conformal_axioms(const CheckOptions& o, Recorder& rec) {
  const int max_v = o.max_degree;
  const std::vector<ConformalElement> mons = monomials(max_v);
  const Poly lam = Poly::var(Var::L);
  const Poly d_plus_lam = Poly::var(Var::D) + lam;
  for (const auto& a : mons)
    for (const auto& b : mons) {
      if (v_degree(a) + v_degree(b) > max_v) continue;
      const Poly ab = lambda_product(a, b).poly();
      rec.check(lambda_product(a.apply_d(), b).poly() == -lam * ab,
                [&] { return "C2 fails for " + to_string(a) + ", " + to_string(b); });
      rec.check(lambda_product(a, b.apply_d()).poly() == d_plus_lam * ab,
                [&] { return "C3 fails for " + to_string(a) + ", " + to_string(b); });
      for (const auto& c : mons) {
        if (v_degree(a) + v_degree(b) + v_degree(c) > max_v) continue;
        rec.check(check_associativity(a, b, c), [&] {
          return "associativity fails for " + to_string(a) + ", " + to_string(b) + ", " + to_string(c);
        });
      }
    }
}

void suite_module_associativity(const CheckOptions& o, Recorder& rec) {
  std::mt19937_64 rng(o.seed);
  const int per_module = std::max(1, o.samples / 50);
  for (const ModuleSpec& spec : shipped_modules()) {
    const FiniteModule M = make_module(spec);
    for (int s = 0; s < per_module; ++s) {
      const ModuleElement m = random_element(M.rank(), 4, rng);
      const ModuleElement defect = module_associativity_defect(m, M);
      rec.check(defect.is_zero(), [&] { return M.name() + " at " + to_string(m) + ": " + to_string(defect); });
    }
  }
}

void suite_coefficient_action(const CheckOptions& o, Recorder& rec) {
  std::mt19937_64 rng(o.seed);
  for (const ModuleSpec& spec : shipped_modules()) {
    const FiniteModule M = make_module(spec);
    const ModuleElement m = random_element(M.rank(), 3, rng);
    for (const ConformalElement& c : monomials(3))
      for (int n = 0; n <= 5; ++n) {
        const ModuleElement via_words = act_algebra(coeff_image(c, n), m, M);
        const ModuleElement full = act_lambda(c, m, M);
        ModuleElement via_lambda = ModuleElement::zero(M.rank());
        for (int i = 0; i < M.rank(); ++i) via_lambda.coords[i] = full.coords[i].coefficient(Var::L, n) * factorial(n);
        rec.check(via_words == via_lambda,
                  [&] { return M.name() + ": " + to_string(c) + " at n=" + std::to_string(n); });
      }
  }
}

void suite_chain_map(const CheckOptions& o, Recorder& rec) {
  std::mt19937_64 rng(o.seed);
  const Window w{o.max_sum, 0};
  for (const ModuleSpec& spec : shipped_modules()) {
    const FiniteModule M = make_module(spec);
    for (int n = 0; n <= o.max_degree; ++n) {
      const Cochain phi = random_cochain(n, M.rank(), w.W, rng);
      const Cochain a = d_map(hochschild_delta(phi, M, w), M, w);
      const Cochain b = hochschild_delta(d_map(phi, M, w), M, w);
      rec.check(a == b, [&] { return M.name() + ": DΔ != ΔD in degree " + std::to_string(n); });
    }
  }
}

bool product_is_zero(const RationalMatrix& A, const RationalMatrix& B) {
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) {
      Rational s = 0;
      for (int k = 0; k < A.cols(); ++k)
        if (!is_zero(A.at(i, k)) && !is_zero(B.at(k, j))) s += A.at(i, k) * B.at(k, j);
      if (!is_zero(s)) return false;
    }
  return true;
}

void suite_nabla_squared(const CheckOptions& o, Recorder& rec) {
  const Window w{o.max_sum, 0};
  for (const ModuleSpec& spec : shipped_modules()) {
    const FiniteModule M = make_module(spec);
    AssembledMatrix lower = assemble_matrix(0, M, w);
    for (int n = 1; n <= o.max_degree; ++n) {
      AssembledMatrix upper = assemble_matrix(n, M, w);
      rec.check(product_is_zero(upper.matrix, lower.matrix),
                [&] { return M.name() + ": ∇∇ != 0 from degree " + std::to_string(n - 1); });
      lower = std::move(upper);
    }
  }
}

void suite_reduction(const CheckOptions& o, Recorder& rec) {
  std::mt19937_64 rng(o.seed);
  const Window w{o.max_sum, 0};
  for (const ModuleSpec& spec : shipped_modules()) {
    const FiniteModule M = make_module(spec);
    for (int n = 0; n <= o.max_degree; ++n) {
      const Cochain phi = random_cochain(n, M.rank(), w.W, rng);
      const Reduction red = reduce_cochain(phi, M, w);
      Cochain rebuilt = d_map(red.h, M, w);
      for (const auto& [x, m] : include(red.s).values) rebuilt.set(x, rebuilt.at(x, M.rank()) + m);
      rec.check(rebuilt == phi, [&] { return M.name() + ": s + Dh != φ in degree " + std::to_string(n); });
      const ScalarCochain of_image = reduce_cochain(d_map(phi, M, w), M, w).s;
      rec.check(of_image.values.empty(), [&] { return M.name() + ": D-image does not reduce to 0"; });
    }
  }
}

using Suite = void (*)(const CheckOptions&, Recorder&);

const std::map<std::string, Suite>& suite_table() {
  static const std::map<std::string, Suite> table = {
      {"confluence", suite_confluence},
      {"delta-squared", suite_delta_squared},
      {"morse-vs-closed", suite_morse_vs_closed},
      {"delta-formulas", suite_delta_formulas},
      {"homotopy", suite_homotopy},
      {"conformal-axioms", suite_conformal_axioms},
      {"module-associativity", suite_module_associativity},
      {"coefficient-action", suite_coefficient_action},
      {"chain-map", suite_chain_map},
      {"nabla-squared", suite_nabla_squared},
      {"reduction", suite_reduction},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suite_table()) v.push_back(name);
    return v;
  }();
  return names;
}

CheckReport run_check(const std::string& suite, const CheckOptions& opts) {
  auto it = suite_table().find(suite);
  if (it == suite_table().end()) throw std::invalid_argument("unknown check suite '" + suite + "'");
  if (opts.max_degree < 0 || opts.max_sum < 0 || opts.samples < 0)
    throw std::invalid_argument("check options must be nonnegative");
  CheckReport rep;
  rep.suite = suite;
  const auto t0 = Clock::now();
  Recorder rec{rep};
  it->second(opts, rec);
  rep.seconds = seconds_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!detail.str().empty()) detail << "; ";
    detail << what << (ok ? " ok" : " FAILED");
    passed = passed && ok;
  }
  void suite(const CheckReport& r) {
    std::ostringstream s;
    s << r.suite << " " << (r.cases - r.failures) << "/" << r.cases;
    if (!r.examples.empty()) s << " [" << r.examples.front() << "]";
    require(r.passed(), s.str());
  }
};

Outcome criterion1() {
  Outcome out;
  const AlgebraElement nf = normal_form(parse_word("v(2)v(3)v(1)"));
  AlgebraElement expected = AlgebraElement::word(NormalWord{2, 6});
  expected.add_term(NormalWord{1, 5}, 7);
  expected.add_term(NormalWord{0, 4}, 8);
  out.require(nf == expected, "v(2)v(3)v(1) -> " + to_string(nf));
  out.suite(run_check("confluence", CheckOptions{0, 0, 1000, 20240601}));
  return out;
}

Outcome criterion2() {
  Outcome out;
  out.suite(run_check("delta-formulas", CheckOptions{3, 8, 0, 1}));
  out.suite(run_check("morse-vs-closed", CheckOptions{3, 8, 0, 1}));
  return out;
}

Outcome criterion3() {
  Outcome out;
  out.suite(run_check("delta-squared", CheckOptions{5, 10, 0, 1}));
  out.suite(run_check("homotopy", CheckOptions{4, 8, 0, 1}));
  return out;
}

Outcome criterion4() {
  Outcome out;
  const AnickChain x = parse_chain("[2|1|1]");
  ChainCombination expected;
  expected.add_term(parse_chain("[1|1|1]"), AlgebraElement(Rational(-2)));
  expected.add_term(parse_chain("[2|1|0]"), AlgebraElement(Rational(-1)));
  const MorseResolution& R = u2_resolution();
  // (Dψ)(x) = ∂ψ(x) - ψ(transfer(x)), so the expected transfer is the
  // negative of 2ψ(1,1,1) + ψ(2,1,0).
  out.require(R.derivation_transfer(x) == expected, "f(∂ g[2|1|1]) = " + to_string(R.derivation_transfer(x)));
  out.require(R.derivation_transfer_dropping(x) == expected,
              "dropped evaluation = " + to_string(R.derivation_transfer_dropping(x)));
  return out;
}

Outcome criterion5() {
  Outcome out;
  bool ok = true;
  for (const Rational& alpha : {Rational(0), Rational(1), Rational(-1, 2)})
    for (int delta = -2; delta <= 3; ++delta)
      ok = ok && check_locality_compat(alpha, delta) == (delta == 0 || delta == 1);
  out.require(ok, "locality criterion on Δ ∈ {-2..3}, α ∈ {0,1,-1/2}");
  for (const Rational& alpha : {Rational(0), Rational(1), Rational(-1, 2)}) {
    bool rejected = false;
    try {
      make_module(ModuleSpec::standard(alpha, 2));
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    out.require(rejected, "M(" + to_string(alpha) + ",2) rejected");
  }
  return out;
}

Outcome criterion6() {
  Outcome out;
  for (int alpha : {0, 1}) {
    const FiniteModule M = make_module(ModuleSpec::standard(alpha, 1));
    for (int d : {1, 2}) {
      const AssembledMatrix A = assemble_matrix(d, M, Window{10, 0});
      out.require(A.matrix == nabla_formula_matrix(d, alpha, 10),
                  "∇" + std::to_string(d) + " α=" + std::to_string(alpha) + " (" + std::to_string(A.matrix.rows()) +
                      "x" + std::to_string(A.matrix.cols()) + ")");
    }
  }
  return out;
}

std::string describe(const CohomologyReport& r, double secs) {
  std::ostringstream s;
  s << "H" << r.degree << "(" << r.module << ") W=" << r.W << " dim_H=" << r.dim_H << (r.stable ? " stable" : " unstable")
    << " " << static_cast<int>(secs * 1000) << "ms";
  return s.str();
}

void require_dim(Outcome& out, int n, const ModuleSpec& spec, int W, int expected, double budget) {
  const auto t0 = Clock::now();
  const CohomologyReport r = cohomology_dim(n, make_module(spec), Window{W, 3});
  const double secs = seconds_since(t0);
  out.require(r.dim_H == expected && r.stable && (budget <= 0 || secs < budget), describe(r, secs));
}

Outcome criterion7() {
  Outcome out;
  require_dim(out, 1, ModuleSpec::standard(0, 1), 12, 1, 60);
  for (const Rational& alpha : {Rational(1), Rational(-2), Rational(1, 2)})
    require_dim(out, 1, ModuleSpec::standard(alpha, 1), 12, 0, 60);
  return out;
}

Outcome criterion8() {
  Outcome out;
  for (int n : {2, 3, 4}) {
    const int W = n == 4 ? 9 : 10;
    for (int alpha : {0, 1}) {
      require_dim(out, n, ModuleSpec::standard(alpha, 1), W, 0, 0);
      const ConstructionResult c =
          verify_theorem_constructions(make_module(ModuleSpec::standard(alpha, 1)), n, Window{W, 3});
      out.require(c.ok, "constructions n=" + std::to_string(n) + " α=" + std::to_string(alpha) + " (" +
                            std::to_string(c.cocycles_checked) + " cocycles)" + (c.ok ? "" : ": " + c.detail));
    }
  }
  return out;
}

Outcome criterion9() {
  Outcome out;
  for (int n : {2, 3}) {
    require_dim(out, n, ModuleSpec::standard(0, 0), 10, 0, 0);
    require_dim(out, n, ModuleSpec::extension(0, 1, 1), 10, 0, 0);
  }
  return out;
}

Outcome criterion10() {
  Outcome out;
  out.suite(run_check("conformal-axioms", CheckOptions{6, 0, 0, 1}));
  out.suite(run_check("module-associativity", CheckOptions{0, 0, 500, 7}));
  out.suite(run_check("chain-map", CheckOptions{3, 8, 0, 11}));
  out.suite(run_check("nabla-squared", CheckOptions{4, 9, 0, 1}));
  return out;
}

struct CriterionDef {
  const char* title;
  double budget;
  Outcome (*run)();
};

const CriterionDef kCriteria[kCriteriaCount] = {
    {"normal form example and rewriting confluence", 5, criterion1},
    {"closed-form δ₂, δ₃ and Morse agreement", 30, criterion2},
    {"δδ = 0 and f d g = δ", 60, criterion3},
    {"D³ example on [2|1|1]", 0, criterion4},
    {"module locality criterion", 0, criterion5},
    {"reduced differentials ∇¹, ∇² against closed forms", 0, criterion6},
    {"H¹ of M(α,1)", 240, criterion7},
    {"H², H³, H⁴ of M(α,1) and explicit constructions", 300, criterion8},
    {"H², H³ for M(0,0) and ext(0,1,1)", 0, criterion9},
    {"property suites", 120, criterion10},
};

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriteriaCount) throw std::invalid_argument("criterion id out of range: " + std::to_string(id));
  const CriterionDef& def = kCriteria[id - 1];
  CriterionResult res;
  res.id = id;
  res.title = def.title;
  res.budget_seconds = def.budget;
  const auto t0 = Clock::now();
  try {
    Outcome o = def.run();
    res.passed = o.passed;
    res.detail = o.detail.str();
  } catch (const std::exception& e) {
    res.passed = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = seconds_since(t0);
  if (def.budget > 0 && res.seconds >= def.budget) {
    res.passed = false;
    res.detail += "; runtime budget exceeded";
  }
  return res;
}

}  // namespace wca
