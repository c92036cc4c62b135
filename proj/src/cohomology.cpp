#include "wca/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace wca {

void Window::validate() const {
  if (margin < 0 || W < margin)
    throw std::invalid_argument("window requires W >= margin >= 0 (got W=" + std::to_string(W) +
                                ", margin=" + std::to_string(margin) + ")");
}

ModuleElement Cochain::at(const AnickChain& x, int rank) const {
  auto it = values.find(x);
  return it == values.end() ? ModuleElement::zero(rank) : it->second;
}

void Cochain::set(const AnickChain& x, ModuleElement m) {
  if (m.is_zero()) values.erase(x);
  else values[x] = std::move(m);
}

RationalVector ScalarCochain::at(const AnickChain& x, int rank) const {
  auto it = values.find(x);
  return it == values.end() ? RationalVector(static_cast<std::size_t>(rank)) : it->second;
}

void ScalarCochain::set(const AnickChain& x, RationalVector v) {
  if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_zero(q); })) values.erase(x);
  else values[x] = std::move(v);
}

void ScalarCochain::normalize() {
  for (auto it = values.begin(); it != values.end();) {
    const bool zero = std::all_of(it->second.begin(), it->second.end(), [](const Rational& q) { return is_zero(q); });
    it = zero ? values.erase(it) : std::next(it);
  }
}

std::vector<AnickChain> window_chains(int degree, int max_sum) {
  if (max_sum < 0) return {};
  return enumerate_chains(degree, max_sum);
}

namespace {

ModuleElement evaluate(const ChainCombination& x, const Cochain& phi, const FiniteModule& M) {
  ModuleElement out = ModuleElement::zero(M.rank());
  for (const auto& [y, c] : x.terms()) {
    auto it = phi.values.find(y);
    if (it == phi.values.end()) continue;
    out += act_algebra(c, it->second, M);
  }
  return out;
}

}  // namespace

Cochain hochschild_delta(const Cochain& phi, const FiniteModule& M, const Window& w) {
  const MorseResolution& R = u2_resolution();
  Cochain out{phi.degree + 1, {}};
  for (const AnickChain& x : window_chains(phi.degree + 1, w.W)) out.set(x, evaluate(R.delta(x), phi, M));
  return out;
}

Cochain d_map(const Cochain& phi, const FiniteModule& M, const Window& w) {
  const MorseResolution& R = u2_resolution();
  Cochain out{phi.degree, {}};
  for (const AnickChain& a : window_chains(phi.degree, w.W))
    out.set(a, module_derivation(phi.at(a, M.rank())) - evaluate(R.derivation_transfer(a), phi, M));
  return out;
}

Reduction reduce_cochain(const Cochain& phi, const FiniteModule& M, const Window& w) {
  const MorseResolution& R = u2_resolution();
  const int r = M.rank();
  Reduction red{ScalarCochain{phi.degree, {}}, Cochain{phi.degree, {}}};
  // Values at a chain only depend on h at chains of smaller sum, which the
  // (sum, lex) enumeration has already produced.
  for (const AnickChain& c : window_chains(phi.degree, w.W)) {
    ModuleElement g = phi.at(c, r);
    const ChainCombination transfer = R.derivation_transfer(c);
    for (const auto& [y, lambda] : transfer.terms()) {
      if (!lambda.is_scalar())
        throw std::logic_error("reduce_cochain: non-scalar derivation transfer at " + to_string(c));
      auto it = red.h.values.find(y);
      if (it != red.h.values.end()) g += Poly(lambda.augmentation()) * it->second;
    }
    RationalVector s(static_cast<std::size_t>(r));
    ModuleElement h = ModuleElement::zero(r);
    for (int i = 0; i < r; ++i) {
      auto [constant, quotient] = split_constant(g.coords[i]);
      s[i] = constant;
      h.coords[i] = std::move(quotient);
    }
    red.s.set(c, std::move(s));
    red.h.set(c, std::move(h));
  }
  return red;
}

Cochain include(const ScalarCochain& s) {
  Cochain out{s.degree, {}};
  for (const auto& [x, v] : s.values) {
    ModuleElement m = ModuleElement::zero(static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) m.coords[i] = Poly(v[i]);
    out.set(x, std::move(m));
  }
  return out;
}

ScalarCochain reduced_delta(const ScalarCochain& s, const FiniteModule& M, const Window& w) {
  return reduce_cochain(hochschild_delta(include(s), M, w), M, w).s;
}

int worker_threads() {
  if (const char* env = std::getenv("WCA_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1) return static_cast<int>(std::min<long>(n, 256));
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

AssembledMatrix assemble_matrix(int n, const FiniteModule& M, const Window& w) {
  if (n < 0) throw std::invalid_argument("assemble_matrix: degree must be nonnegative");
  AssembledMatrix out;
  out.rank = M.rank();
  out.col_chains = window_chains(n, w.W);
  out.row_chains = window_chains(n + 1, w.W);
  const int r = out.rank;
  const int cols = static_cast<int>(out.col_chains.size()) * r;
  const int rows = static_cast<int>(out.row_chains.size()) * r;
  out.matrix = RationalMatrix(rows, cols);

  std::map<AnickChain, int> row_index;
  for (std::size_t k = 0; k < out.row_chains.size(); ++k) row_index[out.row_chains[k]] = static_cast<int>(k);

  // Warm the shared caches serially so workers mostly read.
  for (const auto& x : out.row_chains) u2_resolution().delta(x);
  for (const auto& x : out.row_chains) u2_resolution().derivation_transfer(x);

  std::vector<ScalarCochain> images(static_cast<std::size_t>(cols));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int col; (col = next.fetch_add(1)) < cols;) {
      ScalarCochain e{n, {}};
      RationalVector v(static_cast<std::size_t>(r));
      v[col % r] = 1;
      e.set(out.col_chains[col / r], std::move(v));
      images[col] = reduced_delta(e, M, w);
    }
  };
  const int threads = std::min(worker_threads(), std::max(cols, 1));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (int col = 0; col < cols; ++col)
    for (const auto& [x, v] : images[col].values) {
      const int base = row_index.at(x) * r;
      for (int i = 0; i < r; ++i) out.matrix.at(base + i, col) = v[i];
    }
  return out;
}

namespace {

struct Dims {
  int ker = 0;
  int im = 0;
};

std::vector<int> inner_coordinates(const std::vector<AnickChain>& chains, int r, int inner) {
  std::vector<int> idx;
  for (std::size_t k = 0; k < chains.size(); ++k)
    if (chains[k].sum() <= inner)
      for (int i = 0; i < r; ++i) idx.push_back(static_cast<int>(k) * r + i);
  return idx;
}

std::vector<RationalVector> project(const std::vector<RationalVector>& vs, const std::vector<int>& idx) {
  std::vector<RationalVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    RationalVector p;
    p.reserve(idx.size());
    for (int i : idx) p.push_back(v[i]);
    out.push_back(std::move(p));
  }
  return out;
}

Dims window_dims(int n, const FiniteModule& M, const Window& w, std::map<int, int>* counts) {
  const AssembledMatrix upper = assemble_matrix(n, M, w);
  const AssembledMatrix lower = assemble_matrix(n - 1, M, w);
  const int r = M.rank();
  const std::vector<int> idx = inner_coordinates(upper.col_chains, r, w.inner());
  const int len = static_cast<int>(idx.size());
  Dims d;
  d.ker = rank_of(project(upper.matrix.kernel_basis(), idx), len);
  d.im = rank_of(project(lower.matrix.column_space_basis(), idx), len);
  if (counts) {
    (*counts)[n - 1] = static_cast<int>(lower.col_chains.size());
    (*counts)[n] = static_cast<int>(upper.col_chains.size());
    (*counts)[n + 1] = static_cast<int>(upper.row_chains.size());
  }
  return d;
}

}  // namespace

CohomologyReport cohomology_dim(int n, const FiniteModule& M, const Window& w) {
  if (n < 1) throw std::invalid_argument("cohomology_dim: degree must be at least 1");
  w.validate();
  CohomologyReport rep;
  rep.degree = n;
  rep.module = M.name();
  rep.W = w.W;
  rep.margin = w.margin;
  const Dims here = window_dims(n, M, w, &rep.chain_counts);
  rep.dim_ker_proj = here.ker;
  rep.dim_im_proj = here.im;
  rep.dim_H = here.ker - here.im;
  // Same inner window, one step less of outer room. Without a margin only
  // the cohomology dimension itself can be compared.
  if (w.margin >= 1) {
    const Dims below = window_dims(n, M, Window{w.W - 1, w.margin - 1}, nullptr);
    rep.stable = below.ker == here.ker && below.im == here.im;
  } else if (w.W >= 1) {
    const Dims below = window_dims(n, M, Window{w.W - 1, 0}, nullptr);
    rep.stable = below.ker - below.im == rep.dim_H;
  }
  return rep;
}

namespace {

ScalarCochain from_vector(const RationalVector& v, const std::vector<AnickChain>& chains, int degree, int r) {
  ScalarCochain s{degree, {}};
  for (std::size_t k = 0; k < chains.size(); ++k) {
    RationalVector entry(v.begin() + static_cast<std::ptrdiff_t>(k) * r, v.begin() + static_cast<std::ptrdiff_t>(k + 1) * r);
    s.set(chains[k], std::move(entry));
  }
  return s;
}

Rational value(const ScalarCochain& s, std::vector<int> idx) {
  auto it = s.values.find(AnickChain{std::move(idx)});
  return it == s.values.end() ? Rational(0) : it->second[0];
}

bool all_positive(const std::vector<int>& idx) {
  return std::all_of(idx.begin(), idx.end(), [](int i) { return i >= 1; });
}

Rational sign(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

ScalarCochain subtract(const ScalarCochain& a, const ScalarCochain& b) {
  ScalarCochain out = a;
  for (const auto& [x, v] : b.values) {
    RationalVector cur = out.at(x, static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) cur[i] -= v[i];
    out.set(x, std::move(cur));
  }
  return out;
}

// β on chains of degree d-1 built from the cocycle s of degree d.
template <class Rule>
ScalarCochain build_beta(int d, int max_sum, Rule rule) {
  ScalarCochain beta{d - 1, {}};
  for (const AnickChain& y : window_chains(d - 1, max_sum)) {
    const std::optional<Rational> b = rule(y.idx);
    if (b && !is_zero(*b)) beta.set(y, RationalVector{*b});
  }
  return beta;
}

}  // namespace

ConstructionResult verify_theorem_constructions(const FiniteModule& M, int n, const Window& w) {
  const ModuleSpec& spec = M.spec();
  if (spec.kind != ModuleSpec::Kind::Standard || spec.delta != 1)
    throw std::invalid_argument("verify_theorem_constructions: module must be M(alpha,1)");
  if (n < 2) throw std::invalid_argument("verify_theorem_constructions: degree must be at least 2");
  w.validate();
  const Rational alpha = spec.alpha;
  const AssembledMatrix A = assemble_matrix(n, M, w);
  const std::vector<RationalVector> cocycles = A.matrix.kernel_basis();

  ConstructionResult result;
  for (const RationalVector& v : cocycles) {
    ScalarCochain residual = from_vector(v, A.col_chains, n, 1);
    auto step = [&](auto rule) {
      const ScalarCochain beta = build_beta(n, w.W, rule);
      residual = subtract(residual, reduced_delta(beta, M, w));
    };
    if (alpha != 0) {
      // Determined by the values on chains ending in 0.
      step([&](const std::vector<int>& idx) -> std::optional<Rational> {
        if (!all_positive(idx)) return std::nullopt;
        std::vector<int> ext = idx;
        ext.push_back(0);
        return sign(n - 1) * value(residual, ext) / alpha;
      });
    } else {
      // First clear the values on [..|1|0], then those on [..|1].
      step([&](const std::vector<int>& idx) -> std::optional<Rational> {
        if (idx.back() != 0 || !all_positive(std::vector<int>(idx.begin(), idx.end() - 1))) return std::nullopt;
        std::vector<int> ext(idx.begin(), idx.end() - 1);
        ext.push_back(1);
        ext.push_back(0);
        return sign(n - 1) * value(residual, ext);
      });
      step([&](const std::vector<int>& idx) -> std::optional<Rational> {
        if (!all_positive(idx)) return std::nullopt;
        std::vector<int> ext = idx;
        ext.push_back(1);
        return sign(n) * value(residual, ext);
      });
    }
    ++result.cocycles_checked;
    for (const auto& [x, val] : residual.values) {
      if (x.sum() > w.inner()) continue;
      result.ok = false;
      result.failing_chain = x;
      result.detail = "construction leaves " + to_string(val[0]) + " at " + to_string(x);
      return result;
    }
  }
  return result;
}

}  // namespace wca
