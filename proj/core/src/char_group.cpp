#include "massform/char_group.hpp"

#include <numeric>

#include "massform/errors.hpp"

namespace massform {

namespace {

long mod_reduce(long v, long m) {
  long r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

CharClass::CharClass(long a_in, long b_in, long modulus_in) {
  if (modulus_in < 1) raise(Errc::IndexOutOfRange, "character modulus must be >= 1");
  modulus = modulus_in;
  a = mod_reduce(a_in, modulus);
  b = mod_reduce(b_in, modulus);
}

CharClass CharClass::operator+(const CharClass& o) const {
  if (modulus != o.modulus) raise(Errc::IndexOutOfRange, "character modulus mismatch");
  return CharClass(a + o.a, b + o.b, modulus);
}

CharClass CharClass::operator-(const CharClass& o) const {
  if (modulus != o.modulus) raise(Errc::IndexOutOfRange, "character modulus mismatch");
  return CharClass(a - o.a, b - o.b, modulus);
}

CharClass CharClass::operator-() const { return CharClass(-a, -b, modulus); }

CharClass CharClass::times(long k) const { return CharClass(a * k, b * k, modulus); }

std::string CharClass::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

ValClass::ValClass(long v, long m) {
  if (m < 1) raise(Errc::IndexOutOfRange, "valuation modulus must be >= 1");
  modulus = m;
  value = mod_reduce(v, m);
}

CharClass omega(const LocalField& F) {
  long m = F.char_modulus();
  if (F.is_equal_char()) return CharClass::trivial(m);
  if (m == 1) return CharClass::trivial(m);  // p = 2: the dual group is trivial

  long a = mod_reduce(F.e(), m);
  if (F.omega_unit_index().has_value()) return CharClass(a, *F.omega_unit_index(), m);
  if (F.e() == 1) {
    // Adjoining the p-th roots of unity is the same as adjoining a
    // (p-1)-th root of -p, so omega is the Kummer class of -p. With
    // pi = p as uniformizer the unit part is -1 = u^((q-1)/2), giving
    // unit coordinate (q-1)/2 mod (p-1) (0 when p = 2).
    if (F.p() == 2) return CharClass(a, 0, m);
    BigInt half = (F.q() - 1) / 2;
    long b = static_cast<long>(half % m);
    return CharClass(a, b, m);
  }
  raise(Errc::MissingOmegaData,
        "unit coordinate of omega is not determined for e > 1; supply omega_unit_index");
}

long vbar_omega(const LocalField& F) {
  long m = F.char_modulus();
  return F.is_mixed() ? mod_reduce(F.e(), m) : 0;
}

ValClass vbar(const CharClass& chi) { return ValClass(chi.a, chi.modulus); }

long char_order(const CharClass& chi) {
  long g = std::gcd(std::gcd(chi.a, chi.b), chi.modulus);
  return chi.modulus / g;
}

std::vector<CharClass> enumerate_chars(const LocalField& F) {
  long m = F.char_modulus();
  std::vector<CharClass> out;
  out.reserve(static_cast<size_t>(m) * static_cast<size_t>(m));
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) out.emplace_back(a, b, m);
  return out;
}

ClosureDescriptor closure_info(const LocalField& F, const CharClass& chi) {
  if (chi.modulus != F.char_modulus())
    raise(Errc::IndexOutOfRange, "character modulus does not match the field");
  CharClass psi = omega(F) - chi;
  ClosureDescriptor d;
  d.subgroup_generator = psi;
  d.tame_degree = char_order(psi);
  d.galois_closure_order = F.p() * d.tame_degree;
  d.tame_ram_index = psi.modulus / std::gcd(psi.a, psi.modulus);
  d.is_cyclic = psi.is_trivial();
  return d;
}

}  // namespace massform
