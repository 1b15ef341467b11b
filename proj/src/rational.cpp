#include "bihole/rational.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "bihole/error.hpp"

namespace bihole {

namespace {

mpz_class to_mpz(std::int64_t v) {
  // mpz_class has no portable int64 constructor; go through the string form.
  return mpz_class(std::to_string(v));
}

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(to_mpz(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  value_ = mpq_class(to_mpz(num), to_mpz(den));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-') {
    throw Error(ErrorKind::InvalidArgument, "not a rational: '" + std::string(text) + "'");
  }
  mpz_class d(std::string{den});
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  return Rational(mpq_class(mpz_class(std::string{num}), d));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorKind::InvalidArgument, "non-finite double");
  return Rational(mpq_class(value));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw Error(ErrorKind::InvalidArgument, str() + " is not an integer");
  const std::string s = numerator();
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, s + " does not fit in 64 bits");
  }
  return v;
}

std::string Rational::str() const {
  return is_integer() ? numerator() : numerator() + "/" + denominator();
}

std::string Rational::decimal(int digits) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, to_double());
  return buf;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace bihole
