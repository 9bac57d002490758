#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "tgr/polynomial.hpp"

namespace tgr {

namespace {

Monomial monomial_pow(const Monomial& m, unsigned e) {
  Monomial r;
  for (unsigned i = 0; i < e; ++i) r = r * m;
  return r;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.set(i, std::min(a[i], b[i]));
  return r;
}

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q, bool subtract) {
  Monomial common = lcm(p.denominator, q.denominator);
  Polynomial a = p.numerator.mul_monomial(common / p.denominator);
  Polynomial b = q.numerator.mul_monomial(common / q.denominator);
  return {subtract ? a - b : a + b, common};
}

LaurentPolynomial reduce(LaurentPolynomial v) {
  if (v.denominator.is_one()) return v;
  if (v.numerator.is_zero()) return {v.numerator, Monomial()};
  Monomial g = v.denominator;
  for (const auto& t : v.numerator.terms()) g = monomial_gcd(g, t.monomial);
  if (g.is_one()) return v;
  std::vector<Term> terms;
  for (const auto& t : v.numerator.terms()) terms.push_back({t.monomial / g, t.coeff});
  return {Polynomial(v.numerator.ring(), std::move(terms)), v.denominator / g};
}

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  LaurentPolynomial parse() {
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    LaurentPolynomial v = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return reduce(std::move(v));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "': " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPolynomial constant(const Scalar& c) const {
    return {Polynomial::constant(ring_, c), Monomial()};
  }

  LaurentPolynomial expression() {
    skip();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    LaurentPolynomial v = term();
    if (negate) v.numerator = -v.numerator;
    for (;;) {
      if (accept('+')) {
        v = add(v, term(), false);
      } else if (accept('-')) {
        v = add(v, term(), true);
      } else {
        return v;
      }
    }
  }

  LaurentPolynomial term() {
    LaurentPolynomial v = factor();
    for (;;) {
      if (accept('*')) {
        LaurentPolynomial f = factor();
        v = {v.numerator * f.numerator, v.denominator * f.denominator};
      } else if (accept('/')) {
        LaurentPolynomial f = reduce(factor());
        if (f.numerator.size() != 1) fail("division is only supported by a single term");
        const Term& t = f.numerator.leading_term();
        v = {v.numerator * Polynomial::constant(ring_, t.coeff.inverse()),
             v.denominator * t.monomial};
        v.numerator = v.numerator.mul_monomial(f.denominator);
        v = reduce(std::move(v));
      } else {
        return v;
      }
    }
  }

  LaurentPolynomial factor() {
    LaurentPolynomial base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      base = {base.numerator.pow(e), monomial_pow(base.denominator, e)};
    }
    return base;
  }

  LaurentPolynomial primary() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPolynomial v = expression();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(Scalar(Rational::parse(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "w") {
        if (ring_.field() == Field::rational) fail("'w' is not allowed in a ring over Q");
        return constant(Scalar::omega());
      }
      if (!ring_.has(name)) fail("unknown variable '" + std::string(name) + "'");
      return {Polynomial::variable(ring_, name), Monomial()};
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_laurent(std::string_view text, const Ring& ring) {
  return Parser(text, ring).parse();
}

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  LaurentPolynomial v = parse_laurent(text, ring);
  if (!v.denominator.is_one()) {
    throw std::invalid_argument("'" + std::string(text) + "' is not a polynomial");
  }
  return v.numerator;
}

}  // namespace tgr
