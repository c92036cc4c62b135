#include "wca/coefficient_algebra.hpp"

#include <cctype>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace wca {

std::vector<int> NormalWord::letters() const {
  if (is_unit()) return {};
  std::vector<int> out(static_cast<std::size_t>(zeros), 0);
  out.push_back(tail);
  return out;
}

AlgebraElement::AlgebraElement(const Rational& c) { add_term(NormalWord::unit(), c); }

AlgebraElement AlgebraElement::word(const NormalWord& w, const Rational& c) {
  AlgebraElement x;
  x.add_term(w, c);
  return x;
}

bool AlgebraElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational AlgebraElement::augmentation() const { return coefficient(NormalWord::unit()); }

Rational AlgebraElement::coefficient(const NormalWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const NormalWord& w, const Rational& c) {
  if (wca::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (wca::is_zero(it->second)) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (wca::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  return r *= Rational(-1);
}

namespace {

// v(0)^k · x
AlgebraElement prepend_zeros(const AlgebraElement& x, int k) {
  if (k == 0) return x;
  AlgebraElement out;
  for (const auto& [w, c] : x.terms()) {
    if (w.is_unit()) out.add_term(NormalWord{k - 1, 0}, c);
    else out.add_term(NormalWord{w.zeros + k, w.tail}, c);
  }
  return out;
}

class LetterProductCache {
 public:
  // v(n) · v(0)^l v(m)
  AlgebraElement get(int n, int l, int m) {
    const Key key{n, l, m};
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    AlgebraElement value = compute(n, l, m);
    std::unique_lock lock(mutex_);
    cache_.emplace(key, value);
    return value;
  }

 private:
  struct Key {
    int n, l, m;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return (static_cast<std::size_t>(k.n) * 1000003u + static_cast<std::size_t>(k.l)) * 1000003u +
             static_cast<std::size_t>(k.m);
    }
  };

  AlgebraElement compute(int n, int l, int m) {
    if (n == 0) return AlgebraElement::word(NormalWord{l + 1, m});
    if (l == 0) {
      AlgebraElement r = AlgebraElement::word(NormalWord{1, n + m});
      r.add_term(NormalWord{0, n + m - 1}, Rational(n));
      return r;
    }
    // v(n) v(0) = v(0) v(n) + n v(n-1), then recurse on the shorter word.
    AlgebraElement r = prepend_zeros(get(n, l - 1, m), 1);
    r += get(n - 1, l - 1, m) * Rational(n);
    return r;
  }

  std::shared_mutex mutex_;
  std::unordered_map<Key, AlgebraElement, KeyHash> cache_;
};

LetterProductCache& letter_cache() {
  static LetterProductCache cache;
  return cache;
}

}  // namespace

AlgebraElement multiply_words(const NormalWord& a, const NormalWord& b) {
  if (a.is_unit()) return AlgebraElement::word(b);
  if (b.is_unit()) return AlgebraElement::word(a);
  return prepend_zeros(letter_cache().get(a.tail, b.zeros, b.tail), a.zeros);
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) {
      const Rational c = cx * cy;
      const AlgebraElement product = multiply_words(wx, wy);
      for (const auto& [w, cw] : product.terms()) out.add_term(w, c * cw);
    }
  return out;
}

AlgebraElement normal_form(const RawWord& w) {
  for (int n : w)
    if (n < 0) throw std::invalid_argument("normal_form: letter index must be nonnegative");
  AlgebraElement acc(1);
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = multiply(AlgebraElement::letter(*it), acc);
  return acc;
}

namespace {

// Position of a reducible pair v(n)v(m), n >= 1, chosen by the given order.
std::ptrdiff_t find_redex(const RawWord& w, RewriteOrder order, std::mt19937_64& rng) {
  std::vector<std::ptrdiff_t> hits;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] >= 1) hits.push_back(static_cast<std::ptrdiff_t>(i));
  if (hits.empty()) return -1;
  switch (order) {
    case RewriteOrder::Leftmost: return hits.front();
    case RewriteOrder::Rightmost: return hits.back();
    case RewriteOrder::Random: return hits[std::uniform_int_distribution<std::size_t>(0, hits.size() - 1)(rng)];
  }
  return hits.front();
}

}  // namespace

AlgebraElement normal_form(const RawWord& w, RewriteOrder order, std::uint64_t seed) {
  for (int n : w)
    if (n < 0) throw std::invalid_argument("normal_form: letter index must be nonnegative");
  std::mt19937_64 rng(seed);
  std::map<RawWord, Rational> pending{{w, Rational(1)}};
  AlgebraElement out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const RawWord& word = node.key();
    const Rational& c = node.mapped();
    const std::ptrdiff_t i = find_redex(word, order, rng);
    if (i < 0) {
      NormalWord nw = word.empty() ? NormalWord::unit() : NormalWord{static_cast<int>(word.size()) - 1, word.back()};
      out.add_term(nw, c);
      continue;
    }
    const int n = word[i];
    const int m = word[i + 1];
    auto emit = [&](RawWord next, const Rational& k) {
      if (is_zero(k)) return;
      auto [it, inserted] = pending.emplace(std::move(next), k);
      if (!inserted) {
        it->second += k;
        if (is_zero(it->second)) pending.erase(it);
      }
    };
    RawWord first = word;
    first[i] = 0;
    first[i + 1] = n + m;
    emit(std::move(first), c);
    RawWord second(word.begin(), word.begin() + i);
    second.push_back(n + m - 1);
    second.insert(second.end(), word.begin() + i + 2, word.end());
    emit(std::move(second), c * n);
  }
  return out;
}

AlgebraElement derivation(const AlgebraElement& x) {
  // Only the last letter of v(0)^k v(n) has a nonzero derivative, and the
  // result v(0)^k v(n-1) is again normal.
  AlgebraElement out;
  for (const auto& [w, c] : x.terms()) {
    if (w.is_unit() || w.tail == 0) continue;
    out.add_term(NormalWord{w.zeros, w.tail - 1}, c * (-w.tail));
  }
  return out;
}

AlgebraElement coeff_image(const ConformalElement& c, int n) {
  if (n < 0) throw std::invalid_argument("coeff_image: n must be nonnegative");
  AlgebraElement out;
  for (const auto& [e, coeff] : c.poly().terms()) {
    const int a = e[static_cast<int>(Var::D)];
    const int k = e[static_cast<int>(Var::V)];
    if (n - a < 0) continue;
    Rational factor = falling_factorial(n, a);
    if (a % 2) factor = -factor;
    out.add_term(NormalWord{k - 1, n - a}, coeff * factor);
  }
  return out;
}

RawWord parse_word(std::string_view text) {
  RawWord out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("malformed word '" + std::string(text) + "': " + what);
  };
  skip();
  if (text.substr(i) == "1") return out;
  while (skip(), i < text.size()) {
    if (text[i] != 'v') fail("expected 'v'");
    ++i;
    skip();
    if (i >= text.size() || text[i] != '(') fail("expected '('");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("expected a nonnegative index");
    const int n = std::stoi(std::string(text.substr(start, i - start)));
    if (i >= text.size() || text[i] != ')') fail("expected ')'");
    ++i;
    int power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail("expected exponent");
      power = std::stoi(std::string(text.substr(start, i - start)));
    }
    out.insert(out.end(), static_cast<std::size_t>(power), n);
  }
  return out;
}

std::string to_string(const NormalWord& w) {
  if (w.is_unit()) return "1";
  std::string s;
  if (w.zeros == 1) s = "v(0) ";
  else if (w.zeros > 1) s = "v(0)^" + std::to_string(w.zeros) + " ";
  return s + "v(" + std::to_string(w.tail) + ")";
}

std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (w.is_unit()) os << to_string(mag);
    else if (mag == 1) os << to_string(w);
    else os << to_string(mag) << " " << to_string(w);
  }
  return os.str();
}

std::string to_string(const RawWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int n : w) s += "v(" + std::to_string(n) + ")";
  return s;
}

}  // namespace wca
