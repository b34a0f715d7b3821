#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "nodepoly/rational.hpp"

namespace nodepoly {

// A variable set is a struct exposing
//   static constexpr std::array<std::string_view, N> kNames;
//   static constexpr std::array<int, N> kWeights;
// Display order ranks earlier names higher.
template <class Vars>
class Polynomial {
 public:
  static constexpr std::size_t kArity = Vars::kNames.size();
  using Exponents = std::array<int, kArity>;

  static int weighted_degree(const Exponents& e) {
    int deg = 0;
    for (std::size_t i = 0; i < kArity; ++i) deg += Vars::kWeights[i] * e[i];
    return deg;
  }

  /// Graded lexicographic order, largest first.
  struct DisplayOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
      const int da = weighted_degree(a);
      const int db = weighted_degree(b);
      if (da != db) return da > db;
      return a > b;
    }
  };

  using TermMap = std::map<Exponents, Rational, DisplayOrder>;

  Polynomial() = default;
  Polynomial(long c) { add_term(Exponents{}, Rational(c)); }  // NOLINT
  Polynomial(const Rational& c) { add_term(Exponents{}, c); }  // NOLINT

  static Polynomial variable(std::size_t index, int power = 1) {
    Exponents e{};
    e.at(index) = power;
    return monomial(e, Rational(1));
  }

  static Polynomial variable(std::string_view name, int power = 1) {
    return variable(index_of(name), power);
  }

  static Polynomial monomial(const Exponents& e, const Rational& c) {
    Polynomial p;
    p.add_term(e, c);
    return p;
  }

  static std::size_t index_of(std::string_view name) {
    for (std::size_t i = 0; i < kArity; ++i)
      if (Vars::kNames[i] == name) return i;
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(Exponents{}); }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Highest weighted degree of a stored monomial; -1 for the zero polynomial.
  int degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, weighted_degree(e));
    return deg;
  }

  /// Lowest weighted degree of a stored monomial; -1 for the zero polynomial.
  int low_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
      const int d = weighted_degree(e);
      if (deg < 0 || d < deg) deg = d;
    }
    return deg;
  }

  /// Zero counts as homogeneous.
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = weighted_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return weighted_degree(t.first) == d; });
  }

  /// Part of weighted degree exactly `deg`.
  Polynomial homogeneous_part(int deg) const {
    Polynomial out;
    for (const auto& [e, c] : terms_)
      if (weighted_degree(e) == deg) out.terms_.emplace(e, c);
    return out;
  }

  int max_exponent(std::size_t index) const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[index]);
    return m;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }
  Polynomial& operator/=(const Rational& s) {
    if (s == 0) throw std::domain_error("polynomial division by zero");
    for (auto& [e, c] : terms_) c /= s;
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < kArity; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned n) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (n > 0) {
      if (n & 1U) result = result * base;
      n >>= 1U;
      if (n > 0) base = base * base;
    }
    return result;
  }

  /// Canonical rendering: terms in display order, coefficient glued to the
  /// monomial ("3d + 2k + x", "1/2v^2*w1"), variables joined by '*'.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational mag = c;
      const bool negative = mag < 0;
      if (negative) mag = -mag;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      const std::string mono = monomial_string(e);
      if (mono.empty()) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str();
        out += mono;
      }
    }
    return out;
  }

  static std::string monomial_string(const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < kArity; ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += Vars::kNames[i];
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  TermMap terms_;
};

namespace detail {

// Recursive-descent parser for + - * / ^ ( ), rational literals, variable
// names and implicit multiplication ("3d", "2(x+y)", "(x)(y)").
template <class Vars>
class PolynomialParser {
 public:
  using Poly = Polynomial<Vars>;

  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos_) + ": " + what +
                                " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '(';
  }

  Poly expression() {
    Poly acc;
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = (c == '-');
      ++pos_;
    }
    Poly t = term();
    acc = negate ? -t : t;
    for (;;) {
      c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = power();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '/') {
        ++pos_;
        Poly den = power();
        if (den.degree() > 0 || den.is_zero()) fail("division by a non-constant or zero");
        acc /= den.constant_term();
      } else if (starts_factor(c)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Poly power() {
    Poly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < Poly::kArity; ++i)
        if (Vars::kNames[i] == name) return Poly::variable(i);
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("expected a factor");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an arithmetic expression over Vars; accepts every string produced by
/// Polynomial::to_string.
template <class Vars>
Polynomial<Vars> parse_polynomial(std::string_view text) {
  return detail::PolynomialParser<Vars>(text).parse();
}

}  // namespace nodepoly
