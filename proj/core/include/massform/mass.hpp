#pragma once

#include <optional>
#include <vector>

#include "massform/char_group.hpp"
#include "massform/field.hpp"
#include "massform/rational.hpp"

namespace massform {

// One term of the contribution series: the summand attached to break
// index i (mixed characteristic: 0 <= i < e; equal characteristic: the
// residue i mod (p-1) with the geometric tail already folded in).
struct IndexTerm {
  long i = 0;
  long j = 1;     // the jump offset j_{chi,i} in [1, p-1]
  Rational term;  // q-power part, always > 0
};

// Exact value of one character's share of the degree-p mass, with the
// per-index terms kept for inspection.
struct ContributionBreakdown {
  Rational prefactor;                 // p (q-1) / (p-1)
  std::vector<IndexTerm> per_index_terms;
  std::optional<Rational> special_term;  // wildest-level share, trivial chi in char 0 only
  Rational total;
};

// The jump offset j in [1, p-1] determined by
//   v  ==  vbar(omega) - (i + j)   (mod p-1),
// i.e. the unique offset making level i*p + j carry classes of
// valuation class v. Always 1 when p = 2.
// Preconditions: i >= 0 (IndexOutOfRange), v.modulus == max(p-1,1).
long j_index(const LocalField& F, const ValClass& v, long i);

// Mass contribution of the characters with a given chi (exact):
//   p(q-1)/(p-1) * sum_i q^(i - (i p + j_{chi,i}))
// over i in [0, e) in mixed characteristic -- plus p / q^((p-1)e) when
// chi is trivial -- and over all i >= 0 in equal characteristic, where
// the sum collapses along residues of i into a finite rational value.
ContributionBreakdown contribution(const LocalField& F, const CharClass& chi);

// Closed form of the equal-characteristic contribution for the
// characters with vbar(chi) = -a, as a two-part geometric expression.
// Preconditions: EqualChar (WrongCharacteristic), p odd
// (UnsupportedPrime), 0 <= a <= p-2 (IndexOutOfRange).
Rational contribution_closed_equal_char(const LocalField& F, long a);

// Closed form of the mixed-characteristic contribution for the
// characters with vbar(chi) = e mod (p-1), split along e-1 = (p-1)m + s.
// trivial_char selects the trivial character's variant (adds the
// wildest-level share); it requires e = 0 mod (p-1) (IncoherentFlag).
// Precondition: MixedChar (WrongCharacteristic).
Rational contribution_closed_mixed_char(const LocalField& F, bool trivial_char);

// Sum of contribution() over all characters; equals p exactly.
Rational total_mass(const LocalField& F);

// Number of degree-p extensions attached to chi with discriminant
// valuation exponent c(E) = c, inside a fixed separable closure:
//   c = i p + j with j in [1, p-1]: nonzero iff j == j_{chi,i} (and
//     i < e in mixed characteristic), value p(q^{i+1} - q^i)/(p-1);
//   c = e p (mixed characteristic, trivial chi): p * q^e;
//   otherwise 0.
// Preconditions: c >= 1, and c <= e p in mixed characteristic
// (LevelOutOfRange).
BigInt count_by_level(const LocalField& F, const CharClass& chi, long c);

// Series for contribution() cut off at levels i p + j <= max_c;
// in mixed characteristic the cutoff also drops the special term
// unless e p <= max_c. Used to compare against truncated oracles.
Rational contribution_truncated(const LocalField& F, const CharClass& chi, long max_c);

}  // namespace massform
