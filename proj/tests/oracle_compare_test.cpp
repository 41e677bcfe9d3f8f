#include "doctest.h"

#include <functional>

#include "massform/errors.hpp"
#include "massform/mass.hpp"
#include "massform/oracle_compare.hpp"

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

TEST_CASE("dyadic comparison: quadratic extensions of Q_2") {
  LocalField q2 = make_field(CharKind::MixedChar, 2, 1, 1);
  OracleComparison cmp = oracle_compare(q2, 2);
  CHECK(cmp.pass());
  CHECK(cmp.mismatches.empty());
  CHECK(cmp.total_lines == 7);
  CHECK(cmp.total_mass == Rational(2));

  // census rows: (0,0) at levels 0, 1, 2 with 1, 2, 4 lines
  REQUIRE(cmp.census.size() == 3);
  CHECK(cmp.census[0].level == 0);
  CHECK(cmp.census[0].lines_concrete == 1);
  CHECK(cmp.census[1].level == 1);
  CHECK(cmp.census[1].lines_concrete == 2);
  CHECK(cmp.census[1].lines_module == 2);
  CHECK(cmp.census[1].lines_formula == 2);
  CHECK(cmp.census[2].level == 2);
  CHECK(cmp.census[2].lines_concrete == 4);
  CHECK(cmp.census[2].lines_module == 4);
  CHECK(cmp.census[2].lines_formula == 4);

  REQUIRE(cmp.masses.size() == 1);
  CHECK(cmp.masses[0].mass_concrete == Rational(2));
  CHECK(cmp.masses[0].mass_closed_form == Rational(2));

  // the dyadic oracle is complete at level e*p = 2, nothing else works
  CHECK(code_of([&] { oracle_compare(q2, 3); }) == Errc::LevelOutOfRange);
  CHECK(code_of([&] { oracle_compare(q2, 1); }) == Errc::LevelOutOfRange);
}

TEST_CASE("equal-characteristic comparisons pass") {
  LocalField f2t = make_field(CharKind::EqualChar, 2, 1);
  OracleComparison c2 = oracle_compare(f2t, 9);
  CHECK(c2.pass());
  CHECK(c2.total_lines == 63);
  CHECK(c2.total_mass == Rational(BigInt(31), BigInt(16)));

  LocalField f3t = make_field(CharKind::EqualChar, 3, 1);
  OracleComparison c3 = oracle_compare(f3t, 8);
  CHECK(c3.pass());
  CHECK(c3.total_lines == 79);
  CHECK(c3.total_mass == Rational(BigInt(728), BigInt(243)));
  // per-character masses agree with the truncated series
  for (const MassRow& row : c3.masses) {
    CHECK(row.mass_concrete == row.mass_closed_form);
    CHECK(row.mass_concrete == contribution_truncated(f3t, row.chi, 8));
  }

  // residue degree 2
  OracleComparison c22 = oracle_compare(make_field(CharKind::EqualChar, 2, 2), 5);
  CHECK(c22.pass());
  OracleComparison c32 = oracle_compare(make_field(CharKind::EqualChar, 3, 2), 2);
  CHECK(c32.pass());
}

TEST_CASE("census rows agree column by column") {
  LocalField f3t = make_field(CharKind::EqualChar, 3, 1);
  OracleComparison cmp = oracle_compare(f3t, 8);
  for (const CensusRow& row : cmp.census) {
    CHECK(row.lines_concrete == row.lines_module);
    if (row.level >= 1) {
      CHECK(row.lines_concrete == row.lines_formula);
      // cross-check the formula column against count_by_level directly
      long fiber = (row.chi == omega(f3t)) ? 1 : 3;
      CHECK(row.lines_formula * fiber == count_by_level(f3t, row.chi, row.level));
    }
  }
}

TEST_CASE("unsupported fields are refused") {
  CHECK(code_of([] { oracle_compare(make_field(CharKind::MixedChar, 3, 1, 1), 3); }) ==
        Errc::UnsupportedField);
  CHECK(code_of([] { oracle_compare(make_field(CharKind::MixedChar, 2, 2, 1), 2); }) ==
        Errc::UnsupportedField);
  CHECK(code_of([] { oracle_compare(make_field(CharKind::MixedChar, 2, 1, 2), 4); }) ==
        Errc::UnsupportedField);
  CHECK(code_of([] { oracle_compare(make_field(CharKind::EqualChar, 5, 1), 4); }) ==
        Errc::UnsupportedField);
}
