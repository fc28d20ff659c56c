#ifndef NUMOID_POLYNOMIAL_HPP
#define NUMOID_POLYNOMIAL_HPP

#include "numoid/common.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace numoid {

/// Multivariate polynomial with rational coefficients over a fixed number of
/// variables. Terms map exponent vectors to nonzero coefficients.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit Polynomial(std::size_t arity = 0) : arity_(arity) {}

  static Polynomial constant(std::size_t arity, const Rational& c) {
    Polynomial p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t arity, std::size_t index) {
    Exponents e(arity, 0);
    e.at(index) = 1;
    Polynomial p(arity);
    p.add_term(std::move(e), Rational(1));
    return p;
  }

  std::size_t arity() const noexcept { return arity_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  unsigned degree() const noexcept {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (unsigned x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  void add_term(Exponents e, const Rational& c) {
    if (e.size() != arity_) throw Error(ErrorCode::InvalidArgument, "exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Same polynomial over a larger variable set; new variables are appended.
  Polynomial widened(std::size_t arity) const {
    if (arity < arity_) throw Error(ErrorCode::InvalidArgument, "cannot narrow a polynomial");
    Polynomial out(arity);
    for (const auto& [e, c] : terms_) {
      Exponents w = e;
      w.resize(arity, 0);
      out.add_term(std::move(w), c);
    }
    return out;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != arity_) throw Error(ErrorCode::InvalidArgument, "evaluation point has wrong arity");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < arity_; ++i) {
        if (e[i]) term *= ipow(point[i], e[i]);
      }
      sum += term;
    }
    return sum;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_arity(a, b);
    Polynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial out(a.arity_);
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_arity(a, b);
    Polynomial out(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.arity_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(std::move(e), ca * cb);
      }
    }
    return out;
  }

  Polynomial pow(unsigned n) const {
    Polynomial out = constant(arity_, Rational(1));
    Polynomial base = *this;
    while (n) {
      if (n & 1U) out = out * base;
      n >>= 1U;
      if (n) base = base * base;
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Render with the given variable names, highest total degree first.
  std::string to_string(std::span<const std::string_view> names) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<const Exponents*, const Rational*>> order;
    for (const auto& [e, c] : terms_) order.emplace_back(&e, &c);
    auto deg = [](const Exponents& e) {
      unsigned s = 0;
      for (unsigned x : e) s += x;
      return s;
    };
    std::stable_sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
      const unsigned dx = deg(*x.first);
      const unsigned dy = deg(*y.first);
      return dx != dy ? dx > dy : *x.first > *y.first;
    });
    std::string out;
    for (const auto& [e, c] : order) {
      Rational coeff = *c;
      if (out.empty()) {
        if (coeff < 0) out += "-";
      } else {
        out += coeff < 0 ? " - " : " + ";
      }
      coeff = abs(coeff);
      std::string mono;
      for (std::size_t i = 0; i < arity_; ++i) {
        if ((*e)[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if ((*e)[i] > 1) mono += "^" + std::to_string((*e)[i]);
      }
      if (mono.empty()) {
        out += numoid::to_string(coeff);
      } else {
        if (coeff != 1) out += numoid::to_string(coeff) + "*";
        out += mono;
      }
    }
    return out;
  }

 private:
  static void check_arity(const Polynomial& a, const Polynomial& b) {
    if (a.arity_ != b.arity_) throw Error(ErrorCode::InvalidArgument, "polynomial arity mismatch");
  }

  std::size_t arity_;
  std::map<Exponents, Rational> terms_;
};

namespace detail {

// Recursive-descent parser:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | variable | '(' expr ')'
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::span<const std::string_view> variables, std::size_t offset)
      : text_(text), vars_(variables), offset_(offset) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at position " + std::to_string(offset_ + pos_), offset_ + pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      const BigInt e = integer("exponent");
      if (e > 64) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  BigInt integer(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const BigInt num = integer("number");
      if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not exact; write a/b");
      BigInt den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = integer("denominator");
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      return Polynomial::constant(vars_.size(), Rational(num, den));
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return Polynomial::variable(vars_.size(), i);
      }
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::span<const std::string_view> vars_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse one polynomial over `variables`. `offset` shifts reported error
/// positions when `text` is a slice of a longer input.
inline Polynomial parse_polynomial(std::string_view text, std::span<const std::string_view> variables,
                                   std::size_t offset = 0) {
  return detail::PolynomialParser(text, variables, offset).parse();
}

}  // namespace numoid

#endif  // NUMOID_POLYNOMIAL_HPP
