#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "massform/mass.hpp"

namespace massform {

// A mass total over a selected set of characters, with the per-character
// shares kept for display. Members are listed in lexicographic order.
struct AggregateReport {
  std::string selector;
  std::vector<std::pair<CharClass, Rational>> per_char;
  Rational mass;
};

// Mass of the cyclic degree-p extensions: the contribution of omega
// alone. MixedChar with e > 1 needs the omega unit coordinate
// (MissingOmegaData) since the selection singles out one character.
AggregateReport cyclic_mass(const LocalField& F);

// Mass of the extensions whose Galois closure has order p*n, i.e. the
// characters with ord(omega - chi) == n. n must divide p-1
// (NotADivisor; for p = 2 only n = 1 is a divisor).
AggregateReport mass_by_closure_order(const LocalField& F, long n);

// Mass of the extensions whose closure contains a fixed tame cyclic
// layer: gen generates a cyclic subgroup C of the dual group, the
// matching characters are omega - psi for psi running over the
// generators of C. gen == (0,0) degenerates to cyclic_mass.
AggregateReport mass_by_subfield(const LocalField& F, const CharClass& gen);

// Mass of the extensions with unramified tame layer: the characters
// with vbar(chi) == vbar(omega). Never needs omega unit data.
AggregateReport mass_unramified_tame(const LocalField& F);

// Number of degree-p extensions with discriminant level c(E) <= max_c,
// either for one character or (chi absent) for all of them. In mixed
// characteristic levels cap at e*p, so any max_c >= e*p means "all".
BigInt count_extensions_bounded(const LocalField& F, const std::optional<CharClass>& chi,
                                long max_c);

// Checks the level identity of the cyclic tower: for every i < max_i,
// the level i*p + j_{omega,i} equals (p-1) * b where b is the (i+1)-th
// positive integer prime to p, i.e. b = i + 1 + floor(i / (p-1)).
// Returns true iff the identity holds across the whole range.
bool cyclic_level_identity(long p, long max_i);

}  // namespace massform
