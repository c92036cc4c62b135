#include "wca/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace wca {

Poly::Poly(const Rational& c) {
  if (!wca::is_zero(c)) terms_.emplace(Exponent{}, c);
}

Poly Poly::var(Var x, int power) {
  Exponent e{};
  e[static_cast<int>(x)] = power;
  return monomial(1, e);
}

Poly Poly::monomial(const Rational& c, const Exponent& e) {
  Poly p;
  p.add_term(e, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Exponent{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree(Var x) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(x)]);
  return d;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Poly Poly::coefficient(Var x, int k) const {
  Poly out;
  const int i = static_cast<int>(x);
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Exponent f = e;
    f[i] = 0;
    out.terms_.emplace(f, c);
  }
  return out;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (wca::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (wca::is_zero(it->second)) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (wca::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Exponent e;
      for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly Poly::pow(int k) const {
  Poly result(1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Poly Poly::times_var(Var x, int k) const {
  Poly out;
  const int i = static_cast<int>(x);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[i] += k;
    out.terms_.emplace(f, c);
  }
  return out;
}

Poly derivative(const Poly& f, Var x, int k) {
  Poly out;
  const int i = static_cast<int>(x);
  for (const auto& [e, c] : f.terms()) {
    if (e[i] < k) continue;
    Poly::Exponent g = e;
    g[i] -= k;
    out.add_term(g, c * falling_factorial(e[i], k));
  }
  return out;
}

Poly substitute(const Poly& f, Var x, const Poly& replacement) {
  const int i = static_cast<int>(x);
  const int deg = f.degree(x);
  if (deg <= 0) return f;
  std::vector<Poly> powers(deg + 1);
  powers[0] = Poly(1);
  for (int k = 1; k <= deg; ++k) powers[k] = powers[k - 1] * replacement;
  Poly out;
  for (const auto& [e, c] : f.terms()) {
    Poly::Exponent rest = e;
    rest[i] = 0;
    out += Poly::monomial(c, rest) * powers[e[i]];
  }
  return out;
}

Poly shift(const Poly& f, Var x, const Poly& offset) {
  if (offset.contains(x))
    throw std::invalid_argument("shift: offset must not contain the shifted variable");
  return substitute(f, x, Poly::var(x) + offset);
}

std::pair<Rational, Poly> split_constant(const Poly& f) {
  for (const auto& [e, c] : f.terms())
    for (int i = 1; i < kNumVars; ++i)
      if (e[i] != 0) throw std::invalid_argument("split_constant: polynomial is not univariate in ∂");
  const Rational c0 = f.constant_term();
  Poly g;
  for (const auto& [e, c] : f.terms()) {
    if (e[0] == 0) continue;
    Poly::Exponent h = e;
    h[0] -= 1;
    g.add_term(h, c);
  }
  return {c0, g};
}

std::string_view var_symbol(Var x, bool ascii) {
  switch (x) {
    case Var::D: return ascii ? "d" : "∂";
    case Var::V: return "v";
    case Var::L: return ascii ? "l" : "λ";
    case Var::M: return ascii ? "m" : "μ";
  }
  return "?";
}

namespace {

// Graded, then lexicographic with ∂ most significant; printed descending.
bool render_before(const Poly::Exponent& a, const Poly::Exponent& b) {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

std::string to_string(const Poly& f, RenderOptions opts) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Poly::Exponent, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return render_before(a.first, b.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    const bool is_const = e == Poly::Exponent{};
    if (mag != 1 || is_const) factors.push_back(to_string(mag));
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      std::string s(var_symbol(static_cast<Var>(i), opts.ascii));
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
      factors.push_back(std::move(s));
    }
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  // '-' and the Unicode minus sign U+2212.
  bool eat_minus() { return eat("-") || eat("\xE2\x88\x92"); }

  Poly sum() {
    Poly acc;
    bool negate = eat_minus();
    if (!negate) eat("+");
    for (;;) {
      Poly t = product();
      if (negate) acc -= t;
      else acc += t;
      if (eat("+")) negate = false;
      else if (eat_minus()) negate = true;
      else break;
    }
    return acc;
  }

  Poly product() {
    Poly acc = power();
    for (;;) {
      if (eat("*")) {
        acc *= power();
        continue;
      }
      // Juxtaposition: "2d", "d v", "(d+1)(d+2)".
      skip_ws();
      if (pos_ < text_.size() && starts_factor()) {
        acc *= power();
        continue;
      }
      break;
    }
    return acc;
  }

  bool starts_factor() const {
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') return true;
    const auto rest = text_.substr(pos_);
    for (std::string_view s : {"∂", "λ", "μ", "d", "v", "l", "m"})
      if (rest.substr(0, s.size()) == s) return true;
    return false;
  }

  Poly power() {
    Poly base = atom();
    if (eat("^")) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (eat("(")) {
      Poly p = sum();
      if (!eat(")")) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      return Poly(parse_rational(text_.substr(start, pos_ - start)));
    }
    static const std::pair<std::string_view, Var> kVars[] = {
        {"∂", Var::D}, {"λ", Var::L}, {"μ", Var::M}, {"d", Var::D}, {"v", Var::V}, {"l", Var::L}, {"m", Var::M}};
    for (const auto& [sym, x] : kVars)
      if (eat(sym)) return Poly::var(x);
    fail("unexpected character");
  }
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace wca
