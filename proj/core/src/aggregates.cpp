#include "massform/aggregates.hpp"

#include <algorithm>
#include <numeric>

#include "massform/errors.hpp"

namespace massform {

namespace {

AggregateReport collect(const LocalField& F, std::string selector,
                        const std::vector<CharClass>& members) {
  AggregateReport r;
  r.selector = std::move(selector);
  std::vector<CharClass> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const CharClass& chi : sorted) {
    Rational share = contribution(F, chi).total;
    r.mass += share;
    r.per_char.emplace_back(chi, share);
  }
  return r;
}

}  // namespace

AggregateReport cyclic_mass(const LocalField& F) {
  return collect(F, "cyclic", {omega(F)});
}

AggregateReport mass_by_closure_order(const LocalField& F, long n) {
  long m = F.char_modulus();
  if (n < 1 || m % n != 0)
    raise(Errc::NotADivisor, "closure order parameter " + std::to_string(n) +
                                 " does not divide " + std::to_string(m));
  CharClass w = omega(F);
  std::vector<CharClass> members;
  for (const CharClass& chi : enumerate_chars(F))
    if (char_order(w - chi) == n) members.push_back(chi);
  return collect(F, "closure-order " + std::to_string(n), members);
}

AggregateReport mass_by_subfield(const LocalField& F, const CharClass& gen) {
  if (gen.modulus != F.char_modulus())
    raise(Errc::IndexOutOfRange, "generator modulus does not match the field");
  CharClass w = omega(F);
  long n = char_order(gen);
  std::vector<CharClass> members;
  for (long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) members.push_back(w - gen.times(k));
  return collect(F, "subfield gen " + gen.to_string(), members);
}

AggregateReport mass_unramified_tame(const LocalField& F) {
  long v0 = vbar_omega(F);
  std::vector<CharClass> members;
  for (const CharClass& chi : enumerate_chars(F))
    if (vbar(chi).value == v0) members.push_back(chi);
  return collect(F, "unramified tame layer", members);
}

BigInt count_extensions_bounded(const LocalField& F, const std::optional<CharClass>& chi,
                                long max_c) {
  if (max_c < 1) raise(Errc::IndexOutOfRange, "level bound must be >= 1");
  long hi = F.is_mixed() ? std::min(max_c, F.e() * F.p()) : max_c;
  std::vector<CharClass> sel;
  if (chi.has_value())
    sel.push_back(*chi);
  else
    sel = enumerate_chars(F);

  BigInt total = 0;
  for (const CharClass& x : sel)
    for (long c = 1; c <= hi; ++c) total += count_by_level(F, x, c);
  return total;
}

bool cyclic_level_identity(long p, long max_i) {
  if (!is_prime(p)) raise(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (max_i < 0) raise(Errc::IndexOutOfRange, "index bound must be >= 0");
  // j_{omega,i} only depends on i mod (p-1), not on the rest of the
  // field data, so any field with this p represents the cyclic tower.
  LocalField F = make_field(CharKind::MixedChar, p, 1, 1);
  ValClass v(vbar_omega(F), F.char_modulus());
  long coprime_walker = 0;  // the (i+1)-th integer >= 1 prime to p
  for (long i = 0; i < max_i; ++i) {
    do {
      ++coprime_walker;
    } while (coprime_walker % p == 0);
    long b = i + 1 + i / (p - 1);
    if (b != coprime_walker) return false;
    if (i * p + j_index(F, v, i) != (p - 1) * b) return false;
  }
  return true;
}

}  // namespace massform
