#pragma once

#include <vector>

namespace massform {

// One square class of the dyadic rationals Q_2, represented by a
// squarefree-ish integer d in {1, -1, 2, -2, 5, -5, 10, -10}. The level
// records where the class enters the unit-group filtration
//   F_0 = (squares and their unramified twist)  c  F_1  c  F_2,
// read through discriminants: level 0 classes generate the unramified
// quadratic extension (or none at all for d = 1), level n >= 1 classes
// generate ramified extensions with discriminant exponent v(disc) = n+1.
struct TwoAdicClassRep {
  long representative = 1;
  int level = 0;
  bool is_unramified = false;  // true for the classes of 1 and 5
};

// Decides squareness in Q_2 by valuation parity plus a brute-force
// square search on the odd part modulo 2^precision_bits (8 bits is
// already exact for units: odd squares are precisely 1 mod 8).
bool is_square_2adic(long x, int precision_bits = 8);

// The eight square classes, levels attached, sorted by (level, |d|, d).
std::vector<TwoAdicClassRep> q2_square_classes();

// Discriminant exponent c(E) = v(disc) - 1 of E = Q_2(sqrt d) for a
// ramified class representative d. The classes of 1 and 5 do not give
// ramified quadratic extensions: UnramifiedInput.
long q2_extension_c(long d);

}  // namespace massform
