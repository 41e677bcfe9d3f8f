#pragma once

#include <string>
#include <vector>

#include "massform/field.hpp"

namespace massform {

// Characters of the tame Kummer layer.
//
// Let K = F((p-1)-th roots of F^x) and G = Gal(K|F). Kummer theory
// pairs G with F^x / F^x^(p-1), which the unit filtration splits as
// (uniformizer class) x (Teichmuller generator class); both factors are
// cyclic of order p-1. A character chi: G -> F_p^x is recorded by its
// exponents (a, b) on those two generators, i.e. chi corresponds to the
// class of pi^a u^b under the pairing chi_x(g) = g(y)/y with y^(p-1) = x.
//
// The first coordinate (the valuation coordinate) is canonical; the
// second depends on the choice of Teichmuller generator and, when e > 1,
// on the choice of uniformizer. Quantities that matter downstream
// (orders, valuation classes vbar, masses) are invariant under any
// relabeling that fixes the first coordinate.
//
// For p = 2 the group is trivial and every class is (0, 0) mod 1.
struct CharClass {
  long a = 0;        // exponent on the uniformizer class
  long b = 0;        // exponent on the Teichmuller generator class
  long modulus = 1;  // max(p-1, 1)

  CharClass() = default;
  CharClass(long a_in, long b_in, long modulus_in);

  static CharClass trivial(long modulus) { return CharClass(0, 0, modulus); }

  bool is_trivial() const { return a == 0 && b == 0; }

  CharClass operator+(const CharClass& o) const;
  CharClass operator-(const CharClass& o) const;
  CharClass operator-() const;
  CharClass times(long k) const;

  friend bool operator==(const CharClass& x, const CharClass& y) {
    return x.modulus == y.modulus && x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const CharClass& x, const CharClass& y) { return !(x == y); }
  // lexicographic on (a, b); used for canonical listings
  friend bool operator<(const CharClass& x, const CharClass& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }

  std::string to_string() const;  // "(a,b)"
};

// A residue class modulo p-1 (the value group of vbar).
struct ValClass {
  long value = 0;
  long modulus = 1;

  ValClass() = default;
  ValClass(long v, long m);

  friend bool operator==(const ValClass& x, const ValClass& y) {
    return x.modulus == y.modulus && x.value == y.value;
  }
  friend bool operator!=(const ValClass& x, const ValClass& y) { return !(x == y); }
};

// Invariants of the Galois closure of a degree-p extension attached to
// a character chi, read off from psi = omega - chi.
struct ClosureDescriptor {
  long tame_degree = 1;           // order of psi = degree of the tame part Gamma
  long galois_closure_order = 1;  // p * tame_degree
  long tame_ram_index = 1;        // ramification index of the tame part
  CharClass subgroup_generator;   // psi itself, generating <psi>
  bool is_cyclic = false;         // closure cyclic <=> chi == omega
};

// The mod p-1 cyclotomic character. EqualChar: trivial. MixedChar: the
// valuation coordinate is e mod (p-1); the unit coordinate comes from
// the field's omega_unit_index if supplied, otherwise it is computed
// for e = 1 (where the class of p itself is pi^1 u^0 for the canonical
// uniformizer pi = p, making the Teichmuller coordinate of omega the
// discrete logarithm of the (q-1)/2 power sign twist: (q-1)/2 mod (p-1)
// for odd p, 0 for p = 2). For e > 1 without explicit data the unit
// coordinate is not determined: MissingOmegaData.
CharClass omega(const LocalField& F);

// Valuation coordinate of omega; never needs omega_unit_index.
long vbar_omega(const LocalField& F);

// vbar(chi): image of the character's Kummer class under the valuation,
// i.e. the first coordinate as a class mod p-1.
ValClass vbar(const CharClass& chi);

// Order of chi in the dual group: (p-1) / gcd(a, b, p-1).
long char_order(const CharClass& chi);

// All (p-1)^2 characters in lexicographic order; [(0,0)] for p = 2.
std::vector<CharClass> enumerate_chars(const LocalField& F);

// Galois closure data for the extensions attached to chi.
ClosureDescriptor closure_info(const LocalField& F, const CharClass& chi);

}  // namespace massform
