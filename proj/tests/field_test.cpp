#include "doctest.h"

#include <functional>

#include "massform/errors.hpp"
#include "massform/field.hpp"

using namespace massform;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.code();
  }
  FAIL("expected a DomainError");
  return Errc::VerificationFailed;
}

}  // namespace

TEST_CASE("make_field validates its inputs") {
  CHECK(code_of([] { make_field(CharKind::MixedChar, 4, 1, 1); }) == Errc::NotPrime);
  CHECK(code_of([] { make_field(CharKind::MixedChar, 1, 1, 1); }) == Errc::NotPrime);
  CHECK(code_of([] { make_field(CharKind::MixedChar, 3, 0, 1); }) == Errc::IndexOutOfRange);
  CHECK(code_of([] { make_field(CharKind::MixedChar, 3, 1); }) == Errc::MissingRamIndex);
  CHECK(code_of([] { make_field(CharKind::MixedChar, 3, 1, 0); }) == Errc::IndexOutOfRange);
  CHECK(code_of([] { make_field(CharKind::EqualChar, 3, 1, 2); }) == Errc::SpuriousRamIndex);
  CHECK(code_of([] { make_field(CharKind::EqualChar, 3, 1, std::nullopt, 1); }) ==
        Errc::SpuriousOmegaIndex);
  CHECK(code_of([] { make_field(CharKind::MixedChar, 5, 1, 1, 4); }) == Errc::IndexOutOfRange);
  CHECK(code_of([] { make_field(CharKind::MixedChar, 5, 1, 1, -1); }) == Errc::IndexOutOfRange);
}

TEST_CASE("field invariants") {
  LocalField q9 = make_field(CharKind::MixedChar, 3, 2, 2, 1);
  CHECK(q9.is_mixed());
  CHECK(q9.p() == 3);
  CHECK(q9.f() == 2);
  CHECK(q9.e() == 2);
  CHECK(q9.q() == 9);
  CHECK(q9.char_modulus() == 2);
  CHECK(q9.omega_unit_index() == 1);

  LocalField f8t = make_field(CharKind::EqualChar, 2, 3);
  CHECK(f8t.is_equal_char());
  CHECK_FALSE(f8t.has_e());
  CHECK(f8t.q() == 8);
  CHECK(f8t.char_modulus() == 1);

  LocalField big = make_field(CharKind::MixedChar, 131, 2, 1);
  CHECK(big.q() == 17161);
}

TEST_CASE("q_pow handles negative exponents exactly") {
  LocalField F = make_field(CharKind::MixedChar, 3, 2, 1);
  CHECK(F.q_pow(3) == Rational(729));
  CHECK(F.q_pow(0) == Rational(1));
  CHECK(F.q_pow(-2) == Rational(BigInt(1), BigInt(81)));
}

TEST_CASE("primality by trial division") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(97));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(-3));
  CHECK_FALSE(is_prime(91));  // 7 * 13
  CHECK_FALSE(is_prime(7917));
}
