#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bihole {

// Exact arbitrary-precision fraction, always in lowest terms with a positive
// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  // "a" or "a/b", optional leading '-'. Throws Error{InvalidArgument}.
  static Rational parse(std::string_view text);
  // Exact value of a finite double.
  static Rational from_double(double value);

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // Both return integral Rationals.
  Rational floor() const;
  Rational ceil() const;

  // Throws Error{InvalidArgument} unless integral and within int64 range.
  std::int64_t to_int64() const;
  double to_double() const { return value_.get_d(); }
  // "num/den", or just "num" for integers.
  std::string str() const;
  // Decimal with `digits` significant digits (printf %.*g of to_double()).
  std::string decimal(int digits = 12) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpq_class value_;
};

Rational min(const Rational& a, const Rational& b);

}  // namespace bihole
