// Hochschild cochains of U(2) with values in a finite module, computed on the
// Anick resolution and truncated by total chain index sum.
//
// A cochain of degree n assigns a module element to every chain with n
// indices; degree 0 uses the empty chain. The reduced complex is the quotient
// by the image of D, with canonical scalar representatives.
#pragma once

#include "wca/anick.hpp"
#include "wca/linalg.hpp"
#include "wca/modules.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wca {

struct Window {
  int W = 0;
  int margin = 3;

  int inner() const { return W - margin; }
  /// Throws std::invalid_argument unless W >= margin >= 0.
  void validate() const;
};

struct Cochain {
  int degree = 0;
  std::map<AnickChain, ModuleElement> values;

  /// Value at x, or the zero vector of the given rank.
  ModuleElement at(const AnickChain& x, int rank) const;
  void set(const AnickChain& x, ModuleElement m);
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

struct ScalarCochain {
  int degree = 0;
  std::map<AnickChain, RationalVector> values;

  RationalVector at(const AnickChain& x, int rank) const;
  void set(const AnickChain& x, RationalVector v);
  /// Drops zero entries so equal cochains compare equal.
  void normalize();
  friend bool operator==(const ScalarCochain&, const ScalarCochain&) = default;
};

/// Chains of the given degree inside the window, (sum, lex) order.
std::vector<AnickChain> window_chains(int degree, int max_sum);

/// (Δφ)(x) = Σ c·φ(y) over the terms c·y of δ(x).
Cochain hochschild_delta(const Cochain& phi, const FiniteModule& M, const Window& w);

/// (Dφ)(a) = ∂φ(a) - φ(f(∂ₙ g(a))).
Cochain d_map(const Cochain& phi, const FiniteModule& M, const Window& w);

struct Reduction {
  ScalarCochain s;
  Cochain h;
};

/// Unique (s, h) with φ - Dh = s and s scalar valued.
Reduction reduce_cochain(const Cochain& phi, const FiniteModule& M, const Window& w);

Cochain include(const ScalarCochain& s);

/// ∇s = scalar part of Δ(s).
ScalarCochain reduced_delta(const ScalarCochain& s, const FiniteModule& M, const Window& w);

/// Matrix of ∇ in degree n. Coordinates are (chain, basis index) pairs:
/// position k·r + i is basis vector i at the k-th chain.
struct AssembledMatrix {
  RationalMatrix matrix;
  std::vector<AnickChain> col_chains;  // degree n
  std::vector<AnickChain> row_chains;  // degree n + 1
  int rank = 1;                        // module rank r
};

/// Columns are computed in parallel; see worker_threads().
AssembledMatrix assemble_matrix(int n, const FiniteModule& M, const Window& w);

/// Thread count from WCA_THREADS, else the hardware concurrency (at least 1).
int worker_threads();

struct CohomologyReport {
  int degree = 0;
  std::string module;
  int W = 0;
  int margin = 0;
  int dim_ker_proj = 0;
  int dim_im_proj = 0;
  int dim_H = 0;
  /// Same dims at W-1 with the inner window held fixed (margin-1).
  bool stable = false;
  /// Chain counts in the window for degrees n-1, n, n+1.
  std::map<int, int> chain_counts;
};

CohomologyReport cohomology_dim(int n, const FiniteModule& M, const Window& w);

struct ConstructionResult {
  bool ok = true;
  int cocycles_checked = 0;
  /// First chain where the construction misses, with a description.
  std::optional<AnickChain> failing_chain;
  std::string detail;
};

/// Rebuilds a preimage for every window cocycle of ∇ⁿ on M(α,1) following
/// the explicit case split (α ≠ 0, α = 0) and compares on the inner window.
ConstructionResult verify_theorem_constructions(const FiniteModule& M, int n, const Window& w);

}  // namespace wca
