#pragma once

#include <cstdint>
#include <vector>

namespace massform {

// Arithmetic in a small finite field F_{p^d}, p in {2, 3}, d <= 4,
// built as F_p[x]/(irreducible). Elements are encoded as base-p digit
// strings packed into a uint32 (digit k = coefficient of x^k), so 0
// encodes 0 and values run below p^d. Big enough for the concrete
// degree-p oracles; not meant as a general finite-field library.
class GaloisField {
 public:
  using Elem = std::uint32_t;

  // Uses a fixed irreducible polynomial per (p, d); the constructor
  // re-verifies irreducibility by trial division.
  GaloisField(long p, int d);

  long p() const { return p_; }
  int degree() const { return d_; }
  std::uint32_t order() const { return order_; }  // p^d

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const;  // embeds F_p

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  Elem pow(Elem x, std::uint64_t n) const;
  Elem inv(Elem x) const;

  Elem frobenius(Elem x) const { return pow(x, static_cast<std::uint64_t>(p_)); }
  // x^(p^k): k-fold Frobenius
  Elem frobenius_iter(Elem x, int k) const;
  // The p-th root, i.e. the inverse of Frobenius (a bijection here).
  Elem frobenius_inv(Elem x) const;

  // Absolute trace down to F_p, returned as an integer in [0, p).
  long trace(Elem x) const;

  // Digit k of the base-p encoding: the coordinate on x^k.
  long digit(Elem x, int k) const;
  Elem from_digits(const std::vector<long>& digits) const;

 private:
  std::vector<long> to_poly(Elem x) const;
  Elem from_poly(const std::vector<long>& c) const;

  long p_;
  int d_;
  std::uint32_t order_;
  std::vector<long> irred_;  // monic, low -> high, length d+1
};

}  // namespace massform
