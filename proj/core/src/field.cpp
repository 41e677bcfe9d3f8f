#include "massform/field.hpp"

#include <string>

#include "massform/errors.hpp"

namespace massform {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

LocalField make_field(CharKind kind, long p, long f, std::optional<long> e,
                      std::optional<long> omega_unit_index) {
  if (!is_prime(p)) raise(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (f < 1) raise(Errc::IndexOutOfRange, "residue degree f must be >= 1, got " + std::to_string(f));

  if (kind == CharKind::MixedChar) {
    if (!e.has_value())
      raise(Errc::MissingRamIndex, "mixed-characteristic field needs a ramification index e");
    if (*e < 1)
      raise(Errc::IndexOutOfRange, "ramification index e must be >= 1, got " + std::to_string(*e));
  } else {
    if (e.has_value())
      raise(Errc::SpuriousRamIndex, "equal-characteristic field does not take a ramification index");
    if (omega_unit_index.has_value())
      raise(Errc::SpuriousOmegaIndex,
            "equal-characteristic field does not take an omega unit coordinate");
  }

  if (omega_unit_index.has_value()) {
    long hi = p > 2 ? p - 2 : 0;
    if (*omega_unit_index < 0 || *omega_unit_index > hi)
      raise(Errc::IndexOutOfRange, "omega unit coordinate must lie in [0, " + std::to_string(hi) +
                                       "], got " + std::to_string(*omega_unit_index));
  }

  LocalField F;
  F.kind_ = kind;
  F.p_ = p;
  F.f_ = f;
  F.e_ = e;
  F.omega_unit_index_ = omega_unit_index;
  F.q_ = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(f));
  return F;
}

}  // namespace massform
