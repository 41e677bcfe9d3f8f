#include "massform/gf.hpp"

#include <string>

#include "massform/errors.hpp"

namespace massform {

namespace {

// Fixed monic irreducibles over F_p (coefficients low -> high). x^2+1
// works over F_3 since -1 is not a square there; the quartic is the
// Conway polynomial x^4 - x^3 - 1.
const std::vector<long>* fixed_irreducible(long p, int d) {
  static const std::vector<long> f2_1{0, 1};           // x
  static const std::vector<long> f2_2{1, 1, 1};        // x^2 + x + 1
  static const std::vector<long> f2_3{1, 1, 0, 1};     // x^3 + x + 1
  static const std::vector<long> f2_4{1, 1, 0, 0, 1};  // x^4 + x + 1
  static const std::vector<long> f3_1{0, 1};           // x
  static const std::vector<long> f3_2{1, 0, 1};        // x^2 + 1
  static const std::vector<long> f3_4{2, 0, 0, 2, 1};  // x^4 + 2x^3 + 2
  if (p == 2) {
    if (d == 1) return &f2_1;
    if (d == 2) return &f2_2;
    if (d == 3) return &f2_3;
    if (d == 4) return &f2_4;
  }
  if (p == 3) {
    if (d == 1) return &f3_1;
    if (d == 2) return &f3_2;
    if (d == 4) return &f3_4;
  }
  return nullptr;
}

long mod_p(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

// plain polynomial arithmetic over F_p, low -> high coefficients

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b, long p) {
  std::vector<long> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = mod_p(c[i + j] + a[i] * b[j], p);
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

std::vector<long> poly_rem(std::vector<long> a, const std::vector<long>& m, long p) {
  long lead_inv = 1;
  // m is monic in all our uses; guard anyway
  for (long t = 1; t < p; ++t)
    if (mod_p(m.back() * t, p) == 1) lead_inv = t;
  while (a.size() >= m.size() && !(a.size() == 1 && a[0] == 0)) {
    long coef = mod_p(a.back() * lead_inv, p);
    size_t shift = a.size() - m.size();
    for (size_t k = 0; k < m.size(); ++k)
      a[shift + k] = mod_p(a[shift + k] - coef * m[k], p);
    while (a.size() > 1 && a.back() == 0) a.pop_back();
  }
  return a;
}

bool poly_is_zero(const std::vector<long>& a) {
  for (long c : a)
    if (c != 0) return false;
  return true;
}

// next monic polynomial of fixed degree in counting order; false at the end
bool next_monic(std::vector<long>& c, long p) {
  for (size_t k = 0; k + 1 < c.size(); ++k) {
    if (++c[k] < p) return true;
    c[k] = 0;
  }
  return false;
}

bool verify_irreducible(const std::vector<long>& m, long p) {
  int d = static_cast<int>(m.size()) - 1;
  if (d == 1) return true;
  for (int deg = 1; deg <= d / 2; ++deg) {
    std::vector<long> cand(static_cast<size_t>(deg) + 1, 0);
    cand.back() = 1;
    do {
      if (poly_is_zero(poly_rem(m, cand, p))) return false;
    } while (next_monic(cand, p));
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(long p, int d) : p_(p), d_(d) {
  const std::vector<long>* m = fixed_irreducible(p, d);
  if (m == nullptr)
    raise(Errc::UnsupportedPrime, "no finite-field model for p = " + std::to_string(p) +
                                      ", degree " + std::to_string(d));
  if (!verify_irreducible(*m, p))
    raise(Errc::VerificationFailed, "fixed modulus polynomial is reducible");
  irred_ = *m;
  order_ = 1;
  for (int k = 0; k < d; ++k) order_ *= static_cast<std::uint32_t>(p);
}

std::vector<long> GaloisField::to_poly(Elem x) const {
  std::vector<long> c(static_cast<size_t>(d_), 0);
  for (int k = 0; k < d_; ++k) {
    c[static_cast<size_t>(k)] = static_cast<long>(x % static_cast<std::uint32_t>(p_));
    x /= static_cast<std::uint32_t>(p_);
  }
  return c;
}

GaloisField::Elem GaloisField::from_poly(const std::vector<long>& c) const {
  Elem x = 0;
  for (size_t k = c.size(); k-- > 0;)
    x = x * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(mod_p(c[k], p_));
  return x;
}

GaloisField::Elem GaloisField::from_int(long v) const {
  return static_cast<Elem>(mod_p(v, p_));
}

GaloisField::Elem GaloisField::add(Elem x, Elem y) const {
  std::vector<long> a = to_poly(x), b = to_poly(y);
  for (int k = 0; k < d_; ++k) a[static_cast<size_t>(k)] = mod_p(a[static_cast<size_t>(k)] + b[static_cast<size_t>(k)], p_);
  return from_poly(a);
}

GaloisField::Elem GaloisField::neg(Elem x) const {
  std::vector<long> a = to_poly(x);
  for (long& c : a) c = mod_p(-c, p_);
  return from_poly(a);
}

GaloisField::Elem GaloisField::sub(Elem x, Elem y) const { return add(x, neg(y)); }

GaloisField::Elem GaloisField::mul(Elem x, Elem y) const {
  if (x == 0 || y == 0) return 0;
  std::vector<long> prod = poly_mul(to_poly(x), to_poly(y), p_);
  std::vector<long> red = poly_rem(std::move(prod), irred_, p_);
  red.resize(static_cast<size_t>(d_), 0);
  return from_poly(red);
}

GaloisField::Elem GaloisField::pow(Elem x, std::uint64_t n) const {
  Elem acc = 1;
  Elem base = x;
  while (n > 0) {
    if (n & 1) acc = mul(acc, base);
    base = mul(base, base);
    n >>= 1;
  }
  return acc;
}

GaloisField::Elem GaloisField::inv(Elem x) const {
  if (x == 0) raise(Errc::IndexOutOfRange, "inverse of zero in a finite field");
  return pow(x, order_ - 2);
}

GaloisField::Elem GaloisField::frobenius_iter(Elem x, int k) const {
  Elem y = x;
  for (int t = 0; t < k; ++t) y = frobenius(y);
  return y;
}

GaloisField::Elem GaloisField::frobenius_inv(Elem x) const {
  // Frobenius has order d, so its inverse is the (d-1)-fold iterate.
  return frobenius_iter(x, d_ - 1);
}

long GaloisField::trace(Elem x) const {
  Elem t = 0;
  Elem y = x;
  for (int k = 0; k < d_; ++k) {
    t = add(t, y);
    y = frobenius(y);
  }
  // the trace lands in F_p, i.e. only digit 0 survives
  for (int k = 1; k < d_; ++k)
    if (digit(t, k) != 0) raise(Errc::VerificationFailed, "trace left the prime field");
  return digit(t, 0);
}

long GaloisField::digit(Elem x, int k) const {
  for (int t = 0; t < k; ++t) x /= static_cast<std::uint32_t>(p_);
  return static_cast<long>(x % static_cast<std::uint32_t>(p_));
}

GaloisField::Elem GaloisField::from_digits(const std::vector<long>& digits) const {
  return from_poly(digits);
}

}  // namespace massform
