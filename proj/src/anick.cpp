#include "wca/anick.hpp"

#include <cctype>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace wca {

int AnickChain::sum() const { return std::accumulate(idx.begin(), idx.end(), 0); }

std::strong_ordering operator<=>(const AnickChain& a, const AnickChain& b) {
  if (auto c = a.sum() <=> b.sum(); c != 0) return c;
  return a.idx <=> b.idx;
}

std::vector<int> BarCell::letters() const {
  std::vector<int> out;
  for (const auto& w : slots) {
    auto l = w.letters();
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

bool Presentation::is_reduced(std::span<const int> word) const {
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j <= word.size(); ++j)
      if (is_obstruction(word.subspan(i, j - i))) return false;
  return true;
}

const Presentation& u2_presentation() {
  static const Presentation p{[](std::span<const int> w) { return w.size() == 2 && w[0] >= 1 && w[1] >= 0; }};
  return p;
}

// ---------------------------------------------------------------------------
// Chains

namespace {

// Enumerates placements of n obstruction intervals [a_j, b_j] (0-based,
// inclusive) on `word` with a_1 = 0, b_n = |word| - 1,
//   a_{j+1} <= b_j,  a_{j+1} > b_{j-1},  b_{j+1} > b_j.
// The visitor receives the b_j and returns true to stop the search.
template <class Visitor>
bool for_each_placement(std::span<const int> word, int n, const Presentation& p, Visitor&& visit) {
  const int t = static_cast<int>(word.size());
  std::vector<int> ends;
  std::function<bool(int, int, int)> rec = [&](int j, int a, int prev_b) -> bool {
    // j intervals placed; the last one starts at a and ends at ends.back().
    const int b = ends.back();
    if (j == n) return b == t - 1 && visit(ends);
    for (int next_a = std::max(a, prev_b) + 1; next_a <= b; ++next_a)
      for (int next_b = b + 1; next_b < t; ++next_b) {
        if (!p.is_obstruction(word.subspan(next_a, next_b - next_a + 1))) continue;
        ends.push_back(next_b);
        const bool stop = rec(j + 1, next_a, b);
        ends.pop_back();
        if (stop) return true;
      }
    return false;
  };
  for (int b1 = 0; b1 < t; ++b1) {
    if (!p.is_obstruction(word.subspan(0, b1 + 1))) continue;
    ends.assign(1, b1);
    if (rec(1, 0, -1)) return true;
  }
  return false;
}

}  // namespace

bool is_prechain(std::span<const int> word, int n, const Presentation& p) {
  if (n < 0) return word.empty();
  if (n == 0) return word.size() == 1;
  return for_each_placement(word, n, p, [](const std::vector<int>&) { return true; });
}

bool is_chain(std::span<const int> word, int n, const Presentation& p) {
  if (n <= 0) return is_prechain(word, n, p);
  return for_each_placement(word, n, p, [&](const std::vector<int>& ends) {
    for (int m = 1; m <= n; ++m)
      for (int s = 1; s <= ends[m - 1]; ++s)
        if (is_prechain(word.subspan(0, s), m, p)) return false;
    return true;
  });
}

bool is_valid_chain(const AnickChain& x) {
  for (std::size_t j = 0; j < x.idx.size(); ++j) {
    const int lower = j + 1 < x.idx.size() ? 1 : 0;
    if (x.idx[j] < lower) return false;
  }
  return true;
}

std::vector<AnickChain> enumerate_chains(int degree, int max_sum) {
  if (degree < 0) throw std::invalid_argument("enumerate_chains: negative degree");
  std::vector<AnickChain> out;
  if (max_sum < 0) return out;
  std::vector<int> idx(static_cast<std::size_t>(degree));
  // Generate by exact sum so the output is already in (sum, lex) order.
  std::function<void(int, int)> fill = [&](int pos, int remaining) {
    if (pos == degree) {
      if (remaining == 0) out.push_back(AnickChain{idx});
      return;
    }
    const int lower = pos + 1 < degree ? 1 : 0;
    for (int v = lower; v <= remaining; ++v) {
      idx[pos] = v;
      fill(pos + 1, remaining - v);
    }
  };
  for (int s = 0; s <= max_sum; ++s) fill(0, s);
  return out;
}

BarCell chain_cell(const AnickChain& x) {
  BarCell c;
  for (int i : x.idx) c.slots.push_back(NormalWord::letter(i));
  return c;
}

bool is_chain_cell(const BarCell& c, const Presentation& p) {
  std::vector<int> prefix;
  for (int j = 0; j < c.degree(); ++j) {
    const auto l = c.slots[j].letters();
    prefix.insert(prefix.end(), l.begin(), l.end());
    if (!is_chain(prefix, j, p)) return false;
  }
  return true;
}

std::optional<AnickChain> cell_chain(const BarCell& c, const Presentation& p) {
  if (!is_chain_cell(c, p)) return std::nullopt;
  AnickChain x;
  for (const auto& w : c.slots) {
    if (w.length() != 1) return std::nullopt;
    x.idx.push_back(w.tail);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Bar complex

namespace {

NormalWord to_normal_word(std::span<const int> letters) {
  if (letters.empty()) return NormalWord::unit();
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i] != 0) throw std::logic_error("letter sequence is not a normal word of Λ");
  return NormalWord{static_cast<int>(letters.size()) - 1, letters.back()};
}

}  // namespace

BarCombination bar_differential(const BarCell& c) {
  BarCombination out;
  const int m = c.degree();
  if (m == 0) return out;
  BarCell rest{std::vector<NormalWord>(c.slots.begin() + 1, c.slots.end())};
  out.add_term(rest, AlgebraElement::word(c.slots[0]));
  for (int i = 1; i < m; ++i) {
    const Rational sign = (i % 2) ? -1 : 1;
    const AlgebraElement merged = multiply_words(c.slots[i - 1], c.slots[i]);
    for (const auto& [w, coeff] : merged.terms()) {
      if (w.is_unit()) continue;  // killed in Λ/k
      BarCell t;
      t.slots.reserve(m - 1);
      t.slots.insert(t.slots.end(), c.slots.begin(), c.slots.begin() + (i - 1));
      t.slots.push_back(w);
      t.slots.insert(t.slots.end(), c.slots.begin() + (i + 1), c.slots.end());
      out.add_term(t, AlgebraElement(sign * coeff));
    }
  }
  // The final term (-1)^m [a1|...|a_{m-1}] ε(a_m) vanishes: ε(A₊) = 0.
  return out;
}

BarCombination bar_differential(const BarCombination& x) {
  BarCombination out;
  for (const auto& [cell, coeff] : x.terms()) out += bar_differential(cell).left_multiply(coeff);
  return out;
}

BarCombination bar_derivation(const BarCell& c) {
  BarCombination out;
  for (int i = 0; i < c.degree(); ++i) {
    const AlgebraElement d = derivation(AlgebraElement::word(c.slots[i]));
    for (const auto& [w, coeff] : d.terms()) {
      BarCell t = c;
      t.slots[i] = w;
      out.add_term(t, AlgebraElement(coeff));
    }
  }
  return out;
}

BarCombination bar_derivation(const BarCombination& x) {
  BarCombination out;
  for (const auto& [cell, coeff] : x.terms()) {
    out.add_term(cell, derivation(coeff));
    out += bar_derivation(cell).left_multiply(coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Morse matching

int chain_prefix(const BarCell& c, const Presentation& p) {
  std::vector<int> prefix;
  int j = 0;
  for (; j < c.degree(); ++j) {
    const auto l = c.slots[j].letters();
    prefix.insert(prefix.end(), l.begin(), l.end());
    if (!is_chain(prefix, j, p)) break;
  }
  return j - 1;
}

namespace {

// Split of slot p+2 as w'w'' with [w1|...|w_{p+1}|w'] a chain cell.
std::optional<BarCell> lower_split(const BarCell& c, int p_index, const Presentation& p) {
  const int slot = p_index + 1;  // 0-based position of w_{p+2}
  if (slot >= c.degree()) return std::nullopt;
  std::vector<int> prefix;
  for (int j = 0; j < slot; ++j) {
    const auto l = c.slots[j].letters();
    prefix.insert(prefix.end(), l.begin(), l.end());
  }
  const auto letters = c.slots[slot].letters();
  for (std::size_t len = 1; len < letters.size(); ++len) {
    std::vector<int> extended = prefix;
    extended.insert(extended.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(len));
    if (!is_chain(extended, slot, p)) continue;
    BarCell split;
    split.slots.assign(c.slots.begin(), c.slots.begin() + slot);
    split.slots.push_back(to_normal_word(std::span(letters).subspan(0, len)));
    split.slots.push_back(to_normal_word(std::span(letters).subspan(len)));
    split.slots.insert(split.slots.end(), c.slots.begin() + slot + 1, c.slots.end());
    return split;
  }
  return std::nullopt;
}

Rational edge_weight(const BarCell& upper, const BarCell& lower) {
  const AlgebraElement w = bar_differential(upper).coefficient(lower);
  if (!w.is_scalar() || w.is_zero())
    throw std::logic_error("matched edge " + to_string(upper) + " -> " + to_string(lower) +
                           " has non-invertible weight " + to_string(w));
  return w.augmentation();
}

}  // namespace

std::optional<MatchedEdge> matched_edge(const BarCell& c, const Presentation& p) {
  const int pc = chain_prefix(c, p);
  if (pc + 1 == c.degree()) return std::nullopt;  // chain cell: critical
  if (auto split = lower_split(c, pc, p)) {
    const Rational w = edge_weight(*split, c);
    return MatchedEdge{std::move(*split), MatchSide::Lower, w};
  }
  if (pc >= 0 && pc + 1 < c.degree()) {
    // Merge slots p+1 and p+2; c is matched with the merged cell if splitting
    // the merged cell gives c back.
    std::vector<int> joined = c.slots[pc].letters();
    const auto next = c.slots[pc + 1].letters();
    joined.insert(joined.end(), next.begin(), next.end());
    if (p.is_reduced(joined)) {
      BarCell merged;
      merged.slots.assign(c.slots.begin(), c.slots.begin() + pc);
      merged.slots.push_back(to_normal_word(joined));
      merged.slots.insert(merged.slots.end(), c.slots.begin() + pc + 2, c.slots.end());
      const int pm = chain_prefix(merged, p);
      if (pm == pc - 1) {
        auto back = lower_split(merged, pm, p);
        if (back && *back == c) {
          const Rational w = edge_weight(c, merged);
          return MatchedEdge{std::move(merged), MatchSide::Upper, w};
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Path weights

struct MorseResolution::Caches {
  std::shared_mutex mutex;
  std::map<BarCell, ChainCombination> f;
  std::map<BarCell, BarCombination> up;
  std::map<AnickChain, ChainCombination> delta;
  std::map<AnickChain, ChainCombination> transfer;
};

namespace {

// Cells on the current recursion path; revisiting one means the matched
// graph has a directed cycle.
class PathGuard {
 public:
  explicit PathGuard(const BarCell& c) : cell_(c) {
    if (!path().insert(c).second)
      throw std::logic_error("Morse graph traversal revisited " + to_string(c) + ": matching is not acyclic");
  }
  ~PathGuard() { path().erase(cell_); }
  PathGuard(const PathGuard&) = delete;
  PathGuard& operator=(const PathGuard&) = delete;

 private:
  static std::set<BarCell>& path() {
    thread_local std::set<BarCell> cells;
    return cells;
  }
  const BarCell& cell_;
};

template <class Map, class Key, class Compute>
typename Map::mapped_type cached(std::shared_mutex& mutex, Map& map, const Key& key, Compute&& compute) {
  {
    std::shared_lock lock(mutex);
    auto it = map.find(key);
    if (it != map.end()) return it->second;
  }
  auto value = compute();
  std::unique_lock lock(mutex);
  return map.emplace(key, std::move(value)).first->second;
}

}  // namespace

MorseResolution::MorseResolution(const Presentation& p) : presentation_(p), caches_(std::make_unique<Caches>()) {}
MorseResolution::~MorseResolution() = default;

ChainCombination MorseResolution::homotopy_f(const BarCell& b) const {
  return cached(caches_->mutex, caches_->f, b, [&]() -> ChainCombination {
    const auto edge = matched_edge(b, presentation_);
    if (!edge) {
      auto chain = cell_chain(b, presentation_);
      if (!chain) throw std::logic_error("critical cell " + to_string(b) + " is not a chain cell");
      return ChainCombination::single(*chain);
    }
    if (edge->side == MatchSide::Upper) return {};
    // b -> partner with weight -1/w, then every other edge out of the partner.
    PathGuard guard(b);
    ChainCombination out;
    const BarCombination boundary = bar_differential(edge->partner);
    for (const auto& [y, coeff] : boundary.terms()) {
      if (y == b) continue;
      out += homotopy_f(y).left_multiply(coeff);
    }
    return out.left_multiply(AlgebraElement(Rational(-1) / edge->weight));
  });
}

ChainCombination MorseResolution::homotopy_f(const BarCombination& x) const {
  ChainCombination out;
  for (const auto& [cell, coeff] : x.terms()) out += homotopy_f(cell).left_multiply(coeff);
  return out;
}

// Sum over paths that start at z with an inverted matched edge and end at any
// cell one degree above z.
BarCombination MorseResolution::upward(const BarCell& z) const {
  return cached(caches_->mutex, caches_->up, z, [&]() -> BarCombination {
    const auto edge = matched_edge(z, presentation_);
    if (!edge || edge->side != MatchSide::Lower) return {};
    PathGuard guard(z);
    BarCombination out = BarCombination::single(edge->partner);
    const BarCombination boundary = bar_differential(edge->partner);
    for (const auto& [y, coeff] : boundary.terms()) {
      if (y == z) continue;
      out += upward(y).left_multiply(coeff);
    }
    return out.left_multiply(AlgebraElement(Rational(-1) / edge->weight));
  });
}

BarCombination MorseResolution::homotopy_g(const AnickChain& x) const {
  const BarCell cell = chain_cell(x);
  BarCombination out = BarCombination::single(cell);
  const BarCombination boundary = bar_differential(cell);
  for (const auto& [z, coeff] : boundary.terms()) out += upward(z).left_multiply(coeff);
  return out;
}

ChainCombination MorseResolution::delta(const AnickChain& x) const {
  return cached(caches_->mutex, caches_->delta, x, [&]() {
    if (!is_valid_chain(x)) throw std::invalid_argument("not an Anick chain: " + to_string(x));
    // x is critical, so every edge out of it is unmatched.
    return homotopy_f(bar_differential(chain_cell(x)));
  });
}

ChainCombination MorseResolution::delta(const ChainCombination& x) const {
  ChainCombination out;
  for (const auto& [chain, coeff] : x.terms()) out += delta(chain).left_multiply(coeff);
  return out;
}

ChainCombination MorseResolution::derivation_transfer(const AnickChain& x) const {
  return cached(caches_->mutex, caches_->transfer, x,
                [&]() { return homotopy_f(bar_derivation(homotopy_g(x))); });
}

ChainCombination MorseResolution::derivation_transfer_dropping(const AnickChain& x) const {
  ChainCombination out;
  const BarCombination derived = bar_derivation(homotopy_g(x));
  for (const auto& [cell, coeff] : derived.terms())
    if (auto chain = cell_chain(cell, presentation_)) out.add_term(*chain, coeff);
  return out;
}

const MorseResolution& u2_resolution() {
  static const MorseResolution r(u2_presentation());
  return r;
}

ChainCombination anick_delta_morse(const AnickChain& x) { return u2_resolution().delta(x); }
BarCombination homotopy_g(const AnickChain& x) { return u2_resolution().homotopy_g(x); }
ChainCombination homotopy_f(const BarCell& b) { return u2_resolution().homotopy_f(b); }

ChainCombination anick_delta_closed(const AnickChain& x) {
  if (!is_valid_chain(x)) throw std::invalid_argument("not an Anick chain: " + to_string(x));
  const int n = x.degree();
  const auto& i = x.idx;
  ChainCombination out;
  if (n == 0) return out;
  auto emit = [&](std::vector<int> target, const AlgebraElement& c) {
    AnickChain y{std::move(target)};
    if (is_valid_chain(y)) out.add_term(y, c);
  };
  // Merge positions j, j+1 (0-based j) into value, optionally decrementing k.
  auto merged = [&](int j, int delta_sum, int dec) {
    std::vector<int> t;
    for (int a = 0; a < n; ++a) {
      if (a == j + 1) continue;
      int v = i[a];
      if (a == j) v = i[j] + i[j + 1] + delta_sum;
      if (a == dec) v -= 1;
      t.push_back(v);
    }
    return t;
  };
  emit(std::vector<int>(i.begin() + 1, i.end()), AlgebraElement::letter(i[0]));
  for (int j = 1; j <= n - 1; ++j) {
    const Rational sign = (j % 2) ? -1 : 1;
    emit(merged(j - 1, -1, -1), AlgebraElement(sign * i[j - 1]));
    emit(merged(j - 1, 0, -1), AlgebraElement::letter(0) * sign);
  }
  for (int j = 2; j <= n - 1; ++j) {
    const Rational sign = (j % 2) ? -1 : 1;
    for (int k = 1; k <= j - 1; ++k) emit(merged(j - 1, 0, k - 1), AlgebraElement(sign * i[k - 1]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text

AnickChain parse_chain(std::string_view text) {
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("malformed chain '" + std::string(text) + "': " + what);
  };
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') fail("expected '['");
  ++i;
  AnickChain x;
  skip();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    for (;;) {
      skip();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail("expected a nonnegative index");
      x.idx.push_back(std::stoi(std::string(text.substr(start, i - start))));
      skip();
      if (i < text.size() && text[i] == '|') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      fail("expected '|' or ']'");
    }
  }
  skip();
  if (i != text.size()) fail("trailing input");
  if (!is_valid_chain(x)) fail("interior indices must be >= 1");
  return x;
}

BarCell parse_cell(std::string_view text) {
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("malformed bar cell '" + std::string(text) + "': " + what);
  };
  auto open = text.find('[');
  auto close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) fail("expected [...]");
  std::string_view body = text.substr(open + 1, close - open - 1);
  BarCell c;
  if (body.find_first_not_of(" \t") == std::string_view::npos) return c;
  std::size_t start = 0;
  for (;;) {
    const auto bar = body.find('|', start);
    const auto piece = body.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    const RawWord w = parse_word(piece);
    if (w.empty()) fail("empty slot");
    if (!u2_presentation().is_reduced(w)) fail("slot " + to_string(w) + " is not a normal word");
    c.slots.push_back(to_normal_word(w));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return c;
}

std::string to_string(const AnickChain& x) {
  std::string s = "[";
  for (std::size_t j = 0; j < x.idx.size(); ++j) s += (j ? "|" : "") + std::to_string(x.idx[j]);
  return s + "]";
}

namespace {

std::string slot_string(const NormalWord& w) {
  std::string s;
  if (w.zeros == 1) s = "v(0)";
  else if (w.zeros > 1) s = "v(0)^" + std::to_string(w.zeros);
  return s + "v(" + std::to_string(w.tail) + ")";
}

template <class Basis>
std::string combination_string(const FreeCombination<Basis>& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : x.terms()) {
    bool negative = false;
    std::string coeff;
    if (c.terms().size() == 1) {
      const auto& [w, q] = *c.terms().begin();
      negative = sgn(q) < 0;
      const Rational mag = abs(q);
      if (w.is_unit()) coeff = mag == 1 ? "" : to_string(mag) + "*";
      else coeff = (mag == 1 ? "" : to_string(mag) + "*") + slot_string(w) + "*";
    } else {
      coeff = "(" + to_string(c) + ")*";
    }
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    os << coeff << to_string(b);
  }
  return os.str();
}

}  // namespace

std::string to_string(const BarCell& c) {
  std::string s = "[";
  for (std::size_t j = 0; j < c.slots.size(); ++j) s += (j ? "|" : "") + slot_string(c.slots[j]);
  return s + "]";
}

std::string to_string(const ChainCombination& x) { return combination_string(x); }
std::string to_string(const BarCombination& x) { return combination_string(x); }

}  // namespace wca
