#include "massform/rational.hpp"

#include <stdexcept>
#include <utility>

namespace massform {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

Rational Rational::pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base.is_zero() && exp < 0)
    throw std::invalid_argument("Rational: zero to a negative power");
  bool invert = exp < 0;
  unsigned long n = invert ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  BigInt pn = mp::pow(base.num_, static_cast<unsigned>(n));
  BigInt pd = mp::pow(base.den_, static_cast<unsigned>(n));
  return invert ? Rational(std::move(pd), std::move(pn)) : Rational(std::move(pn), std::move(pd));
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::string Rational::to_fraction_string() const {
  return num_.str() + "/" + den_.str();
}

std::string Rational::to_decimal_string(int digits, bool trim) const {
  if (digits < 0) throw std::invalid_argument("Rational: negative digit count");
  BigInt n = mp::abs(num_);
  BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(digits));
  // round(|n|/den * scale) with ties away from zero
  BigInt scaled = (n * scale * 2 + den_) / (den_ * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;

  std::string out;
  if (num_ < 0 && scaled != 0) out += "-";
  out += whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    f.insert(f.begin(), static_cast<size_t>(digits) - f.size(), '0');
    if (trim) {
      size_t last = f.find_last_not_of('0');
      f = (last == std::string::npos) ? "" : f.substr(0, last + 1);
    }
    if (!f.empty()) out += "." + f;
  }
  return out;
}

Rational pow_int(const BigInt& base, long exp) {
  return Rational::pow(Rational(base), exp);
}

}  // namespace massform
