// Bar complex over Λ, Anick chains, and the Morse matching that collapses the
// normalized bar resolution onto the Anick resolution.
//
// Degree conventions: a bar cell [w1|...|wm] lives in B_m; an AnickChain with
// m indices [i1|...|im] is the critical cell [v(i1)|...|v(im)] in B_m and
// corresponds to an Anick (m-1)-chain. The empty chain [] spans A_0 = Λ.
#pragma once

#include "wca/coefficient_algebra.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wca {

struct AnickChain {
  std::vector<int> idx;

  int degree() const { return static_cast<int>(idx.size()); }
  int sum() const;
  /// (index sum, lexicographic)
  friend std::strong_ordering operator<=>(const AnickChain& a, const AnickChain& b);
  friend bool operator==(const AnickChain&, const AnickChain&) = default;
};

struct BarCell {
  std::vector<NormalWord> slots;

  int degree() const { return static_cast<int>(slots.size()); }
  std::vector<int> letters() const;
  friend auto operator<=>(const BarCell&, const BarCell&) = default;
};

/// Finite sum of basis elements with left Λ-coefficients.
template <class Basis>
class FreeCombination {
 public:
  using Terms = std::map<Basis, AlgebraElement>;

  FreeCombination() = default;
  static FreeCombination single(const Basis& b, const AlgebraElement& c = AlgebraElement(1)) {
    FreeCombination r;
    r.add_term(b, c);
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  AlgebraElement coefficient(const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? AlgebraElement() : it->second;
  }

  void add_term(const Basis& b, const AlgebraElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  FreeCombination& operator+=(const FreeCombination& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  FreeCombination& operator-=(const FreeCombination& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  /// Left multiplication by λ ∈ Λ.
  FreeCombination left_multiply(const AlgebraElement& lambda) const {
    FreeCombination r;
    if (lambda.is_zero()) return r;
    for (const auto& [b, c] : terms_) r.add_term(b, multiply(lambda, c));
    return r;
  }
  friend FreeCombination operator+(FreeCombination a, const FreeCombination& b) { return a += b; }
  friend FreeCombination operator-(FreeCombination a, const FreeCombination& b) { return a -= b; }
  friend bool operator==(const FreeCombination&, const FreeCombination&) = default;

 private:
  Terms terms_;
};

using BarCombination = FreeCombination<BarCell>;
using ChainCombination = FreeCombination<AnickChain>;

/// An associative presentation given by its set of obstructions (leading
/// words of a Gröbner–Shirshov basis).
struct Presentation {
  std::function<bool(std::span<const int>)> is_obstruction;

  bool is_reduced(std::span<const int> word) const;
};

/// Obstructions v(a)v(b), a >= 1, b >= 0.
const Presentation& u2_presentation();

/// True iff the word is an Anick n-chain (n >= -1; the (-1)-chain is the empty
/// word, 0-chains are letters) over the presentation's obstructions.
bool is_chain(std::span<const int> word, int n, const Presentation& p = u2_presentation());
bool is_prechain(std::span<const int> word, int n, const Presentation& p = u2_presentation());

/// All chains with `degree` indices and index sum <= max_sum, in (sum, lex)
/// order. Degree 0 yields the single empty chain.
std::vector<AnickChain> enumerate_chains(int degree, int max_sum);
/// Index constraints of V^(degree-1): i1..i_{n-1} >= 1, i_n >= 0.
bool is_valid_chain(const AnickChain& x);

BarCell chain_cell(const AnickChain& x);
/// The chain whose critical cell this is, if the cell is a chain cell.
std::optional<AnickChain> cell_chain(const BarCell& c, const Presentation& p = u2_presentation());
/// [w1|...|wm] with every prefix concatenation w1...wj a (j-1)-chain.
bool is_chain_cell(const BarCell& c, const Presentation& p = u2_presentation());

/// d[a1|...|am] = a1 [a2|...|am] + Σ (-1)^i [...|N(a_i a_{i+1})|...].
/// Degree 1 lands on the empty cell: d[a1] = a1·[].
BarCombination bar_differential(const BarCell& c);
BarCombination bar_differential(const BarCombination& x);

/// Slot-wise derivation ∂ₙ, including the derivative of the Λ-coefficients.
BarCombination bar_derivation(const BarCell& c);
BarCombination bar_derivation(const BarCombination& x);

enum class MatchSide {
  Lower,  ///< partner is the cell of one degree higher
  Upper,  ///< partner is the cell of one degree lower
};

struct MatchedEdge {
  BarCell partner;
  MatchSide side;
  /// Coefficient of the lower cell in d(upper cell).
  Rational weight;
};

/// Index p of the longest chain prefix: largest p >= -1 with [w1|...|w_{p+1}]
/// a chain cell.
int chain_prefix(const BarCell& c, const Presentation& p = u2_presentation());

/// Morse matching on the normalized bar complex; std::nullopt for critical
/// cells. Throws std::logic_error if a matched weight is not an invertible
/// scalar.
std::optional<MatchedEdge> matched_edge(const BarCell& c, const Presentation& p = u2_presentation());

/// Path-weight computations on the Morse graph. Results are memoized; the
/// caches are write-once so concurrent use from several threads is safe.
class MorseResolution {
 public:
  explicit MorseResolution(const Presentation& p = u2_presentation());
  ~MorseResolution();
  MorseResolution(const MorseResolution&) = delete;
  MorseResolution& operator=(const MorseResolution&) = delete;

  /// δ(x) = Σ path weights from x to critical cells one degree down.
  ChainCombination delta(const AnickChain& x) const;
  ChainCombination delta(const ChainCombination& x) const;
  ChainCombination homotopy_f(const BarCell& b) const;
  ChainCombination homotopy_f(const BarCombination& b) const;
  BarCombination homotopy_g(const AnickChain& x) const;
  /// f(∂ₙ(g(x))): the part of D subtracted from ∂ψ(x).
  ChainCombination derivation_transfer(const AnickChain& x) const;
  /// Same as derivation_transfer, but evaluated by keeping only the chain
  /// cells of ∂ₙ(g(x)) instead of projecting with f.
  ChainCombination derivation_transfer_dropping(const AnickChain& x) const;

  const Presentation& presentation() const { return presentation_; }

 private:
  struct Caches;
  BarCombination upward(const BarCell& z) const;

  const Presentation& presentation_;
  std::unique_ptr<Caches> caches_;
};

/// Shared instance for U(2).
const MorseResolution& u2_resolution();

ChainCombination anick_delta_morse(const AnickChain& x);
/// Closed formula for δₙ on V^(n-1); targets that are not chains are dropped.
ChainCombination anick_delta_closed(const AnickChain& x);
BarCombination homotopy_g(const AnickChain& x);
ChainCombination homotopy_f(const BarCell& b);

AnickChain parse_chain(std::string_view text);
/// "[v(0)v(1)|v(2)]"; every slot must be a normal word.
BarCell parse_cell(std::string_view text);

std::string to_string(const AnickChain& x);
std::string to_string(const BarCell& c);
std::string to_string(const ChainCombination& x);
std::string to_string(const BarCombination& x);

}  // namespace wca
