#include "massform/two_adic.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "massform/errors.hpp"

namespace massform {

bool is_square_2adic(long x, int precision_bits) {
  if (x == 0) return true;
  int v = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++v;
  }
  if (v % 2 != 0) return false;
  long mod = 1L << precision_bits;
  long target = ((x % mod) + mod) % mod;
  for (long y = 1; y < mod; y += 2)
    if ((y * y) % mod == target) return true;
  return false;
}

namespace {

int class_level(long d) {
  // F_0: the class is a square up to the unramified twist by 5.
  if (is_square_2adic(d) || is_square_2adic(5 * d)) return 0;
  // F_1: even valuation. Equivalently d times some odd class is a square.
  long v = 0;
  long u = std::labs(d);
  while (u % 2 == 0) {
    u /= 2;
    ++v;
  }
  return v % 2 == 0 ? 1 : 2;
}

}  // namespace

std::vector<TwoAdicClassRep> q2_square_classes() {
  std::vector<TwoAdicClassRep> out;
  for (long d : {1L, -1L, 2L, -2L, 5L, -5L, 10L, -10L}) {
    TwoAdicClassRep rep;
    rep.representative = d;
    rep.level = class_level(d);
    rep.is_unramified = d == 1 || d == 5;
    out.push_back(rep);
  }
  std::sort(out.begin(), out.end(), [](const TwoAdicClassRep& x, const TwoAdicClassRep& y) {
    if (x.level != y.level) return x.level < y.level;
    if (std::labs(x.representative) != std::labs(y.representative))
      return std::labs(x.representative) < std::labs(y.representative);
    return x.representative > y.representative;
  });
  return out;
}

long q2_extension_c(long d) {
  if (d == 1 || d == 5)
    raise(Errc::UnramifiedInput,
          "class of " + std::to_string(d) + " gives no ramified quadratic extension");
  bool found = false;
  for (long r : {-1L, 2L, -2L, -5L, 10L, -10L}) found = found || (r == d);
  if (!found) raise(Errc::IndexOutOfRange, "not a class representative: " + std::to_string(d));

  // Z_2[sqrt d] is maximal for d = 2,3 mod 4, so the discriminant of
  // x^2 - d, namely 4d, is the field discriminant: v(disc) = 2 + v(d).
  long v = 0;
  long u = std::labs(d);
  while (u % 2 == 0) {
    u /= 2;
    ++v;
  }
  return (2 + v) - 1;
}

}  // namespace massform
