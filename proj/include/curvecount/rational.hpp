#ifndef CURVECOUNT_RATIONAL_HPP
#define CURVECOUNT_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace curvecount {

// Arbitrary-precision integer. Counts overflow 32 bits by degree 7 and
// 64 bits shortly after, so fixed-width types are never used for values.
using Integer = mpz_class;

// Exact rational number, kept canonical at all times:
// denominator > 0 and gcd(|numerator|, denominator) == 1.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(Integer n) : value_(std::move(n)) {}

  Rational(Integer numerator, Integer denominator) {
    if (denominator == 0)
      throw std::invalid_argument("Rational: zero denominator");
    value_ = mpq_class(std::move(numerator), std::move(denominator));
    value_.canonicalize();
  }

  Integer numerator() const { return Integer(value_.get_num()); }
  Integer denominator() const { return Integer(value_.get_den()); }
  bool is_integer() const { return value_.get_den() == 1; }

  // "p" if integral, "p/q" otherwise; plain decimal digits.
  std::string str() const { return value_.get_str(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.value_ == 0) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }

  template <typename Stream>
  friend Stream& operator<<(Stream& os, const Rational& r) {
    os << r.value_;
    return os;
  }

 private:
  mpq_class value_;
};

// Thrown when a value that must be a whole count is not. Every count in
// scope is an integer, so this always signals a formula transcription bug.
class IntegralityViolation : public std::runtime_error {
 public:
  explicit IntegralityViolation(Rational value)
      : std::runtime_error("not an integer: " + value.str()),
        value_(std::move(value)) {}

  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

inline Integer rational_to_integer(const Rational& q) {
  if (!q.is_integer()) throw IntegralityViolation(q);
  return q.numerator();
}

}  // namespace curvecount

#endif  // CURVECOUNT_RATIONAL_HPP
