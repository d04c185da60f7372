#pragma once

// Exact scalars: rationals with arbitrary-precision integers and the
// Gaussian rationals Q(i) built on top of them.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace geninv {

// A rational number in canonical form: positive denominator, numerator and
// denominator coprime, zero stored as 0/1. Backed by GMP's mpq_class, whose
// arithmetic preserves canonical form on canonical inputs.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(implicit)
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  // Accepts `[-]digits[/digits]`.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  // Throws DivisionByZero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  Rational abs() const;
  Rational inverse() const;

  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

// A complex number with rational real and imaginary parts.
class Gaussian {
public:
  Gaussian() = default;
  Gaussian(long value) : re_(value) {}  // NOLINT(implicit)
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const { return im_.is_zero() && re_ == Rational(1); }

  Gaussian conj() const { return {re_, -im_}; }
  // re^2 + im^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  // Throws DivisionByZero for zero.
  Gaussian inverse() const;

  Gaussian operator-() const { return {-re_, -im_}; }
  Gaussian& operator+=(const Gaussian& other);
  Gaussian& operator-=(const Gaussian& other);
  Gaussian& operator*=(const Gaussian& other);
  Gaussian& operator/=(const Gaussian& other);

  friend Gaussian operator+(Gaussian lhs, const Gaussian& rhs) { return lhs += rhs; }
  friend Gaussian operator-(Gaussian lhs, const Gaussian& rhs) { return lhs -= rhs; }
  friend Gaussian operator*(Gaussian lhs, const Gaussian& rhs) { return lhs *= rhs; }
  friend Gaussian operator/(Gaussian lhs, const Gaussian& rhs) { return lhs /= rhs; }

  friend bool operator==(const Gaussian& lhs, const Gaussian& rhs) {
    return lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
  }

private:
  Rational re_;
  Rational im_;
};

// Scalar grammar:
//   scalar   := rational [("+"|"-") [unsigned] "i"] | [unsigned-or-signed] "i"
//   rational := ["-"] int ["/" int]
// so "3/2-1/3i", "1+i", "-i", "i", "2i" and "-7" are all accepted.
// Throws ParseError with the offending offset.
Gaussian parse_scalar(std::string_view text);

// Inverse of parse_scalar: parse_scalar(render_scalar(x)) == x.
std::string render_scalar(const Gaussian& value);

std::ostream& operator<<(std::ostream& out, const Rational& value);
std::ostream& operator<<(std::ostream& out, const Gaussian& value);

}  // namespace geninv
