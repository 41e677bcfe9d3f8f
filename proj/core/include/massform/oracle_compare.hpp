#pragma once

#include <string>
#include <vector>

#include "massform/char_group.hpp"
#include "massform/field.hpp"
#include "massform/rational.hpp"

namespace massform {

// One (character, level) row of the three-way census comparison:
// lines found by the concrete oracle, lines of the synthetic module,
// and the line count predicted by the counting formulas (the formula
// column is meaningful for levels >= 1 only).
struct CensusRow {
  CharClass chi;
  long level = 0;
  BigInt lines_concrete;
  BigInt lines_module;
  BigInt lines_formula;
};

// Mass recomputed from the concrete oracle's lines against the closed
// form (exact in mixed characteristic, truncated at the same level in
// equal characteristic).
struct MassRow {
  CharClass chi;
  Rational mass_concrete;
  Rational mass_closed_form;
};

struct OracleComparison {
  std::vector<CensusRow> census;
  std::vector<MassRow> masses;
  std::vector<std::string> mismatches;  // empty iff everything agrees
  long total_lines = 0;                 // concrete lines, level 0 included
  Rational total_mass;                  // concrete, summed over characters

  bool pass() const { return mismatches.empty(); }
};

// Runs the concrete oracle available for F and cross-checks it against
// the synthetic module and the counting/mass formulas.
// Supported fields: Q_2 (MixedChar p=2, f=1, e=1; max_level must be
// e*p = 2) and F_q((T)) with p in {2, 3} (truncated at max_level).
// Anything else: UnsupportedField.
OracleComparison oracle_compare(const LocalField& F, long max_level);

}  // namespace massform
