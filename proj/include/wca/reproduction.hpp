// Property-check suites and the acceptance criteria built on them. Shared by
// the `wca check` / `wca verify` commands and the acceptance test binary.
#pragma once

#include "wca/anick.hpp"
#include "wca/cohomology.hpp"
#include "wca/linalg.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wca {

// ---------------------------------------------------------------------------
// Reference formulas, written out term by term and independent of the Morse
// machinery. Targets that are not chains are dropped.

/// v(n)[m] - v(0)[n+m] - n[n+m-1]
ChainCombination delta2_formula(int n, int m);
/// v(n)[m|p] - n[n+m-1|p] - v(0)[n+m|p] + v(0)[n|m+p] + n[n-1|m+p] + m[n|m+p-1]
ChainCombination delta3_formula(int n, int m, int p);

/// Value of ∇s at the chain `x` of degree d+1 for M(α,1), where s has
/// degree d >= 1:
///   Σ_j (-1)^j α s(..i_j+i_{j+1}..)
///   + Σ_{j>=3} Σ_{k<=j-2} (-1)^{k+1} i_j s(..i_k+i_{k+1}..i_j-1..)
///   + Σ_j (-1)^{j+1} i_{j+1} s(..i_j+i_{j+1}-1..)
Rational nabla_formula_entry(const std::vector<int>& x, const Rational& alpha,
                             const std::function<Rational(const std::vector<int>&)>& s);
/// Matrix of the formula above in the coordinates of assemble_matrix(d, ...).
RationalMatrix nabla_formula_matrix(int d, const Rational& alpha, int W);

// ---------------------------------------------------------------------------
// Check suites.

struct CheckOptions {
  int max_degree = 4;
  int max_sum = 8;
  int samples = 1000;
  std::uint64_t seed = 1;
};

struct CheckReport {
  std::string suite;
  long cases = 0;
  long failures = 0;
  std::vector<std::string> examples;  // first few failures
  double seconds = 0;

  bool passed() const { return failures == 0; }
};

/// Suite names accepted by run_check.
const std::vector<std::string>& check_suites();
/// Throws std::invalid_argument for unknown suite names.
CheckReport run_check(const std::string& suite, const CheckOptions& opts);

// ---------------------------------------------------------------------------
// Acceptance criteria.

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;  // 0 means no runtime bound
};

constexpr int kCriteriaCount = 10;

/// Runs one criterion (1..kCriteriaCount). A criterion that exceeds its
/// runtime budget fails.
CriterionResult run_criterion(int id);

}  // namespace wca
