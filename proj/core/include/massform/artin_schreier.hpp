#pragma once

#include <map>
#include <vector>

#include "massform/field.hpp"
#include "massform/filtered_module.hpp"
#include "massform/gf.hpp"

namespace massform {

// Concrete realization of the degree-p theory for F = F_q((T)), q = p^f,
// p in {2, 3}, through Artin-Schreier classes F / (x^p - x).
//
// The ambient field is K = l((S)) where l = F_{q^(p-1)} and S^(p-1) = T:
// for p = 2 that is F itself; for p = 3 it is the quadratic twist
// l((S)), S^2 = T, with Galois group generated by
//   sigma: coefficientwise q-power Frobenius (the unramified part),
//   tau:   S -> -S                            (the ramified part).
// A class is represented by a principal part sum a_n S^(-n) (n >= 1)
// plus a constant, reduced to normal form:
//   - no exponent divisible by p (a_n S^(-np) is replaced by its p-th
//     root at exponent n, which differs by x^p - x of something),
//   - constant term t * theta with t in F_p and theta a fixed trace-one
//     element of l (the constant quotient l / (x^p - x) is F_p by the
//     additive Hilbert 90: the image of x^p - x is the trace kernel).
// Normal forms are unique, so the class space truncated at pole order
// max_level is a plain F_p vector space with one l-block per good
// exponent; sigma and tau act blockwise on it.
//
// A character (a, b) names the G-eigenvalue pair through the same tame
// coordinates as char_group: chi(tau) = (-1)^a, chi(sigma) = (-1)^b.
// The valuation coordinate a is canonical; b depends on this concrete
// model (fixed irreducible moduli, see gf.cpp) and is documented as
// model-dependent.
class ASOracle {
 public:
  // rep: pole exponent -> coefficient in l (absent = zero); exponent 0
  // holds the constant term.
  using Rep = std::map<long, GaloisField::Elem>;

  // Builds the oracle for F_q((T)), q = p^f. Requires p in {2, 3}
  // (UnsupportedPrime) and a coefficient-field model for the degree
  // f (p-1) (see gf.cpp).
  ASOracle(long p, long f);

  const GaloisField& coeff_field() const { return l_; }
  GaloisField::Elem theta() const { return theta_; }

  Rep add(const Rep& x, const Rep& y) const;
  Rep neg(const Rep& x) const;
  // x^p - x, the Artin-Schreier map, computed exactly on principal parts.
  Rep artin_schreier_map(const Rep& x) const;

  // Normal form of the class of x. If witness is non-null it receives a
  // y with x == normalize(x) + (y^p - y), pinning the class equality.
  Rep normalize(const Rep& x, Rep* witness = nullptr) const;

  // The two generators of G acting on classes (normal form in, normal
  // form out). For p = 2 both are the identity.
  Rep act_sigma(const Rep& x) const;
  Rep act_tau(const Rep& x) const;

  bool is_normal(const Rep& x) const;
  long level(const Rep& x) const;  // largest pole order, 0 for constants

 private:
  long p_;
  long f_;
  GaloisField l_;
  GaloisField::Elem theta_ = 0;
};

// The stable lines of the truncated class space, labeled by character
// and break level exactly like the synthetic module's census, so the
// two can be diffed record by record. Truncation must stay in [1, 30]
// (TruncationTooLarge) and the enumeration guard of the synthetic
// module applies here too (EigenspaceTooLarge).
std::vector<LineRecord> as_stable_lines(const LocalField& F, long max_level,
                                        long guard = kDefaultEnumerationGuard);

}  // namespace massform
