#include "geninv/scalar.hpp"

#include "geninv/error.hpp"

#include <cctype>
#include <ostream>

namespace geninv {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

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
  if (other.is_zero()) throw DivisionByZero();
  value_ /= other.value_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / value_));
}

std::string Rational::to_string() const { return value_.get_str(); }

Gaussian Gaussian::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

Gaussian& Gaussian::operator+=(const Gaussian& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& other) {
  Rational re = re_ * other.re_ - im_ * other.im_;
  Rational im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& other) {
  return *this *= other.inverse();
}

namespace {

class ScalarScanner {
public:
  explicit ScalarScanner(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ == text_.size(); }
  std::size_t position() const { return pos_; }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  bool accept(char c) {
    if (peek() != c || at_end()) return false;
    ++pos_;
    return true;
  }

  bool at_digit() const {
    return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) throw ParseError("expected digit", pos_);
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Rational unsigned_rational() {
    mpz_class num = integer();
    if (!accept('/')) return Rational(num, 1);
    const std::size_t den_pos = pos_;
    mpz_class den = integer();
    if (den == 0) throw ParseError("zero denominator", den_pos);
    return Rational(num, den);
  }

  void expect_end() const {
    if (!at_end()) {
      throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    }
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational Rational::parse(std::string_view text) {
  ScalarScanner in(text);
  const bool negative = in.accept('-');
  Rational value = in.unsigned_rational();
  in.expect_end();
  return negative ? -value : value;
}

Gaussian parse_scalar(std::string_view text) {
  ScalarScanner in(text);
  if (in.at_end()) throw ParseError("empty scalar", 0);

  const bool negative = in.accept('-');
  if (in.accept('i')) {
    in.expect_end();
    return {Rational(0), Rational(negative ? -1 : 1)};
  }
  Rational first = in.unsigned_rational();
  if (negative) first = -first;
  if (in.at_end()) return first;
  if (in.accept('i')) {
    in.expect_end();
    return {Rational(0), first};
  }

  bool imag_negative = false;
  if (in.accept('-')) {
    imag_negative = true;
  } else if (!in.accept('+')) {
    throw ParseError(std::string("unexpected character '") + in.peek() + "'",
                     in.position());
  }
  Rational imag(1);
  if (in.at_digit()) imag = in.unsigned_rational();
  if (!in.accept('i')) throw ParseError("expected 'i'", in.position());
  in.expect_end();
  return {first, imag_negative ? -imag : imag};
}

std::string render_scalar(const Gaussian& value) {
  const Rational& re = value.re();
  const Rational& im = value.im();
  if (im.is_zero()) return re.to_string();

  std::string imag;
  if (im.abs() == Rational(1)) {
    imag = "i";
  } else {
    imag = im.abs().to_string() + "i";
  }
  if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + imag;
  return re.to_string() + (im.sign() < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& out, const Rational& value) {
  return out << value.to_string();
}

std::ostream& operator<<(std::ostream& out, const Gaussian& value) {
  return out << render_scalar(value);
}

}  // namespace geninv
