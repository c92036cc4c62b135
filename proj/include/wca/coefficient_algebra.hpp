// The augmented coefficient algebra Λ = A₊(U(2)) ⊕ k·1, generated by letters
// v(n), n >= 0, with the confluent rewriting rules
//   v(n) v(m) -> v(0) v(n+m) + n v(n+m-1),   n >= 1, m >= 0.
// The normal words are exactly v(0)^k v(n).
#pragma once

#include "wca/conformal.hpp"
#include "wca/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wca {

/// v(0)^zeros v(tail), or the unit word when tail < 0.
struct NormalWord {
  int zeros = 0;
  int tail = -1;

  static NormalWord unit() { return {}; }
  static NormalWord letter(int n) { return {0, n}; }

  bool is_unit() const { return tail < 0; }
  /// Number of letters; 0 for the unit.
  int length() const { return is_unit() ? 0 : zeros + 1; }
  std::vector<int> letters() const;

  friend auto operator<=>(const NormalWord&, const NormalWord&) = default;
};

using RawWord = std::vector<int>;

class AlgebraElement {
 public:
  using Terms = std::map<NormalWord, Rational>;

  AlgebraElement() = default;
  AlgebraElement(const Rational& c);  // NOLINT: scalars are c·1
  AlgebraElement(int c) : AlgebraElement(Rational(c)) {}  // NOLINT
  static AlgebraElement word(const NormalWord& w, const Rational& c = 1);
  static AlgebraElement letter(int n) { return word(NormalWord::letter(n)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True for c·1 (including 0).
  bool is_scalar() const;
  /// Coefficient of the unit word; this is the augmentation ε.
  Rational augmentation() const;
  Rational coefficient(const NormalWord& w) const;

  void add_term(const NormalWord& w, const Rational& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);
  AlgebraElement operator-() const;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  Terms terms_;
};

/// Product in Λ (bilinear, normal-formed).
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return multiply(x, y); }

/// Normal form of a product of two normal words. Only the junction of the two
/// words can be reducible, so this runs a short memoized recursion.
AlgebraElement multiply_words(const NormalWord& a, const NormalWord& b);

enum class RewriteOrder { Leftmost, Rightmost, Random };

/// Exhaustive rewriting of a letter sequence. The result does not depend on
/// the order (the rules are confluent); the ordered variants exist so that
/// can be tested.
AlgebraElement normal_form(const RawWord& w);
AlgebraElement normal_form(const RawWord& w, RewriteOrder order, std::uint64_t seed = 0);

/// ∂ extended by Leibniz from ∂ v(n) = -n v(n-1).
AlgebraElement derivation(const AlgebraElement& x);

/// Image of c(n) in A₊: (∂c)(n) = -n c(n-1), c(n) = 0 for n < 0 and
/// v^{k+1}(n) = v(0)^k v(n).
AlgebraElement coeff_image(const ConformalElement& c, int n);

/// Parses "v(2)v(3)v(1)"; whitespace and '*' between letters are allowed.
/// "1" and the empty string give the empty word. Throws std::invalid_argument.
RawWord parse_word(std::string_view text);

std::string to_string(const NormalWord& w);
std::string to_string(const AlgebraElement& x);
std::string to_string(const RawWord& w);

}  // namespace wca
