#pragma once

#include <optional>

#include "massform/rational.hpp"

namespace massform {

// Characteristic pattern of a local field with finite residue field:
// MixedChar is characteristic 0 with residue characteristic p (finite
// extensions of Q_p), EqualChar is characteristic p (Laurent series
// fields F_q((T))).
enum class CharKind { MixedChar, EqualChar };

// A local field F described by its numerical invariants: residue
// characteristic p, residue degree f (so q = p^f) and, in the mixed
// case, the absolute ramification index e = v(p).
//
// The optional omega_unit_index pins down the unit coordinate of the
// cyclotomic character relative to a chosen tame basis; it is only
// meaningful in the mixed case (see char_group.hpp). Instances are
// immutable once built by make_field and safe to share across threads.
class LocalField {
 public:
  CharKind kind() const { return kind_; }
  bool is_mixed() const { return kind_ == CharKind::MixedChar; }
  bool is_equal_char() const { return kind_ == CharKind::EqualChar; }

  long p() const { return p_; }
  long f() const { return f_; }
  const BigInt& q() const { return q_; }

  bool has_e() const { return e_.has_value(); }
  long e() const { return e_.value(); }

  std::optional<long> omega_unit_index() const { return omega_unit_index_; }

  // Order of the tame character group coordinates: max(p-1, 1).
  long char_modulus() const { return p_ > 2 ? p_ - 1 : 1; }

  // q^n as an exact rational, n may be negative.
  Rational q_pow(long n) const { return pow_int(q_, n); }

 private:
  LocalField() = default;
  friend LocalField make_field(CharKind kind, long p, long f, std::optional<long> e,
                               std::optional<long> omega_unit_index);

  CharKind kind_ = CharKind::MixedChar;
  long p_ = 0;
  long f_ = 0;
  std::optional<long> e_;
  std::optional<long> omega_unit_index_;
  BigInt q_ = 0;
};

// Validates and builds a field description.
//   - p must be prime (NotPrime), f >= 1 (IndexOutOfRange)
//   - MixedChar requires e >= 1 (MissingRamIndex / IndexOutOfRange)
//   - EqualChar must not carry e (SpuriousRamIndex) nor an omega unit
//     coordinate (SpuriousOmegaIndex)
//   - omega_unit_index, when given, must lie in [0, max(p-2, 0)]
LocalField make_field(CharKind kind, long p, long f, std::optional<long> e = std::nullopt,
                      std::optional<long> omega_unit_index = std::nullopt);

bool is_prime(long n);

}  // namespace massform
