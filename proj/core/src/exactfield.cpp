#include "tgr/exactfield.hpp"

#include <cctype>

namespace tgr {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw ArithmeticError("division by zero");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (sgn(denominator) == 0) throw ArithmeticError("division by zero");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto parse_int = [](const std::string& digits) {
    if (digits.empty()) throw ArithmeticError("empty integer literal");
    std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
    if (start == digits.size()) throw ArithmeticError("malformed integer literal");
    for (std::size_t i = start; i < digits.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
        throw ArithmeticError("malformed integer literal '" + digits + "'");
      }
    }
    return mpz_class(digits[0] == '+' ? digits.substr(1) : digits, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(s), mpz_class(1));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw ArithmeticError("division by zero");
  value_ /= other.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  return Rational(mpq_class(1 / value_));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Cyclo3& Cyclo3::operator+=(const Cyclo3& other) {
  a_ += other.a_;
  if (!other.b_.is_zero()) b_ += other.b_;
  return *this;
}

Cyclo3& Cyclo3::operator-=(const Cyclo3& other) {
  a_ -= other.a_;
  if (!other.b_.is_zero()) b_ -= other.b_;
  return *this;
}

Cyclo3& Cyclo3::operator*=(const Cyclo3& other) {
  if (b_.is_zero() && other.b_.is_zero()) {
    a_ *= other.a_;
    return *this;
  }
  // (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w
  Rational bd = b_ * other.b_;
  Rational a = a_ * other.a_ - bd;
  Rational b = a_ * other.b_ + b_ * other.a_ - bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Cyclo3& Cyclo3::operator/=(const Cyclo3& other) {
  if (other.is_rational()) {
    if (other.a_.is_zero()) throw ArithmeticError("division by zero");
    a_ /= other.a_;
    b_ /= other.a_;
    return *this;
  }
  return *this *= other.inverse();
}

Rational Cyclo3::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

Cyclo3 Cyclo3::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  Rational n = norm();
  Cyclo3 c = conjugate();
  return {c.a_ / n, c.b_ / n};
}

Cyclo3 Cyclo3::pow(unsigned exponent) const {
  Cyclo3 result(1);
  Cyclo3 base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string Cyclo3::str() const {
  if (b_.is_zero()) return a_.str();
  std::string wpart;
  Rational mag = b_.abs();
  wpart = mag.is_one() ? "w" : mag.str() + "*w";
  if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + wpart;
  return a_.str() + (b_.sign() < 0 ? " - " : " + ") + wpart;
}

std::string Cyclo3::str_as_factor() const {
  if (!b_.is_zero() && !a_.is_zero()) return "(" + str() + ")";
  return str();
}

Cyclo3 Cyclo3::parse(std::string_view text) {
  // Terms: [sign] rational [*w] | [sign] w
  Cyclo3 result;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) throw ArithmeticError("empty field literal");
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw ArithmeticError("expected '+' or '-' in '" + std::string(text) + "'");
    }
    first = false;
    std::size_t start = i;
    while (i < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) {
      ++i;
    }
    Rational coeff(1);
    bool has_number = i > start;
    if (has_number) coeff = Rational::parse(text.substr(start, i - start));
    skip();
    bool is_omega = false;
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip();
      if (i >= text.size() || text[i] != 'w') {
        throw ArithmeticError("expected 'w' after '*' in '" + std::string(text) + "'");
      }
    }
    if (i < text.size() && text[i] == 'w') {
      is_omega = true;
      ++i;
    } else if (!has_number) {
      throw ArithmeticError("malformed field literal '" + std::string(text) + "'");
    }
    if (sign < 0) coeff = -coeff;
    result += is_omega ? Cyclo3(Rational(0), coeff) : Cyclo3(coeff);
    skip();
  }
  return result;
}

}  // namespace tgr
