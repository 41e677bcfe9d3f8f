#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace massform {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number on top of arbitrary-precision integers.
// Invariants: denominator > 0, gcd(num, den) == 1. Arithmetic never
// rounds; decimal rendering is the only place rounding happens and it
// is explicit about the digit count.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long v) : num_(v), den_(1) {}           // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // base^exp with exp allowed to be negative (base must be nonzero then).
  static Rational pow(const Rational& base, long exp);

  // "3" for integers, "9/20" otherwise.
  std::string to_string() const;
  // Always "num/den", e.g. "3/1".
  std::string to_fraction_string() const;
  // Fixed-point rendering rounded half away from zero at `digits`
  // fractional digits; trailing zeros (and a bare point) are trimmed
  // unless `trim` is false.
  std::string to_decimal_string(int digits, bool trim = true) const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

// base^exp as an exact rational, handy for q^(-c) style terms.
Rational pow_int(const BigInt& base, long exp);

}  // namespace massform
