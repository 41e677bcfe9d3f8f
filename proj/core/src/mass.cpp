#include "massform/mass.hpp"

#include <string>

#include "massform/errors.hpp"

namespace massform {

namespace mp = boost::multiprecision;

namespace {

long mod_reduce(long v, long m) {
  long r = v % m;
  return r < 0 ? r + m : r;
}

void check_char(const LocalField& F, const CharClass& chi) {
  if (chi.modulus != F.char_modulus())
    raise(Errc::IndexOutOfRange, "character modulus does not match the field");
}

Rational prefactor(const LocalField& F) {
  // p (q-1) / (p-1)
  return Rational(BigInt(F.p()) * (F.q() - 1), BigInt(F.p() - 1));
}

// p / q^((p-1) e): the share of the wildest level, where the trivial
// character's extensions in mixed characteristic live.
Rational wild_special_term(const LocalField& F) {
  return Rational(F.p()) * F.q_pow(-(F.p() - 1) * F.e());
}

}  // namespace

long j_index(const LocalField& F, const ValClass& v, long i) {
  if (i < 0) raise(Errc::IndexOutOfRange, "break index i must be >= 0");
  if (v.modulus != F.char_modulus())
    raise(Errc::IndexOutOfRange, "valuation class modulus does not match the field");
  long m = F.char_modulus();
  if (F.p() == 2) return 1;
  long r = mod_reduce(vbar_omega(F) - v.value - i, m);
  return r == 0 ? m : r;
}

ContributionBreakdown contribution(const LocalField& F, const CharClass& chi) {
  check_char(F, chi);
  long p = F.p();
  ValClass v = vbar(chi);

  ContributionBreakdown out;
  out.prefactor = prefactor(F);
  Rational series_sum;

  if (F.is_mixed()) {
    for (long i = 0; i < F.e(); ++i) {
      long j = j_index(F, v, i);
      IndexTerm t{i, j, F.q_pow(-(i * (p - 1) + j))};
      series_sum += t.term;
      out.per_index_terms.push_back(std::move(t));
    }
    out.total = out.prefactor * series_sum;
    if (chi.is_trivial()) {
      out.special_term = wild_special_term(F);
      out.total += *out.special_term;
    }
  } else {
    // The break indices i >= 0 fall into residues r mod p-1 along which
    // j is constant, so each residue contributes a geometric series
    // with ratio q^-((p-1)^2); fold that tail into the residue's term.
    long span = p - 1;
    Rational geom = Rational(1) / (Rational(1) - F.q_pow(-span * span));
    for (long r = 0; r < span; ++r) {
      long j = j_index(F, v, r);
      IndexTerm t{r, j, F.q_pow(-(r * (p - 1) + j)) * geom};
      series_sum += t.term;
      out.per_index_terms.push_back(std::move(t));
    }
    out.total = out.prefactor * series_sum;
  }
  return out;
}

Rational contribution_closed_equal_char(const LocalField& F, long a) {
  if (!F.is_equal_char())
    raise(Errc::WrongCharacteristic, "closed equal-characteristic form needs an EqualChar field");
  long p = F.p();
  if (p == 2) raise(Errc::UnsupportedPrime, "closed equal-characteristic form needs p odd");
  if (a < 0 || a > p - 2)
    raise(Errc::IndexOutOfRange, "a must lie in [0, p-2], got " + std::to_string(a));

  Rational qp2 = F.q_pow(p - 2);                  // q^(p-2)
  Rational denom_a = F.q_pow((p - 1) * a) * (qp2 - Rational(1));
  Rational part1 = qp2 * (F.q_pow((p - 2) * a) - Rational(1)) / denom_a;
  Rational part2 = qp2 * (F.q_pow((p - 2) * (p - 1)) - Rational(1)) /
                   (denom_a * (F.q_pow((p - 1) * (p - 1)) - Rational(1)));
  return prefactor(F) * (part1 + part2);
}

Rational contribution_closed_mixed_char(const LocalField& F, bool trivial_char) {
  if (!F.is_mixed())
    raise(Errc::WrongCharacteristic, "closed mixed-characteristic form needs a MixedChar field");
  long p = F.p();
  long e = F.e();
  if (trivial_char && mod_reduce(e, F.char_modulus()) != 0)
    raise(Errc::IncoherentFlag,
          "trivial character requires e = 0 mod (p-1); its valuation class is not e otherwise");

  long span = p - 1;
  long m = (e - 1) / span;
  long s = (e - 1) % span;

  Rational inner;
  for (long n = 0; n < m; ++n)
    for (long r = 0; r <= p - 2; ++r) inner += F.q_pow(-span * span * n - (p - 2) * r);
  for (long r = 0; r <= s; ++r) inner += F.q_pow(-span * span * m - (p - 2) * r);

  Rational total = prefactor(F) * F.q_pow(-(p - 1)) * inner;
  if (trivial_char) total += wild_special_term(F);
  return total;
}

Rational total_mass(const LocalField& F) {
  Rational sum;
  for (const CharClass& chi : enumerate_chars(F)) sum += contribution(F, chi).total;
  return sum;
}

BigInt count_by_level(const LocalField& F, const CharClass& chi, long c) {
  check_char(F, chi);
  if (c < 1) raise(Errc::IndexOutOfRange, "discriminant level c must be >= 1");
  long p = F.p();
  if (F.is_mixed() && c > F.e() * p)
    raise(Errc::LevelOutOfRange, "no level beyond e*p = " + std::to_string(F.e() * p) +
                                     " in mixed characteristic, got " + std::to_string(c));

  if (c % p == 0) {
    // Only the wildest mixed-characteristic level e*p is populated among
    // multiples of p, and only by the trivial character.
    if (F.is_mixed() && c == F.e() * p && chi.is_trivial())
      return BigInt(p) * mp::pow(F.q(), static_cast<unsigned>(F.e()));
    return 0;
  }

  long i = c / p;
  long j = c % p;
  if (j != j_index(F, vbar(chi), i)) return 0;
  BigInt qi = mp::pow(F.q(), static_cast<unsigned>(i));
  return BigInt(p) * qi * (F.q() - 1) / (p - 1);
}

Rational contribution_truncated(const LocalField& F, const CharClass& chi, long max_c) {
  check_char(F, chi);
  if (max_c < 1) raise(Errc::IndexOutOfRange, "truncation level must be >= 1");
  long p = F.p();
  ValClass v = vbar(chi);

  Rational sum;
  long i_hi = F.is_mixed() ? F.e() - 1 : (max_c - 1) / p;
  for (long i = 0; i <= i_hi; ++i) {
    long j = j_index(F, v, i);
    if (i * p + j > max_c) continue;
    sum += F.q_pow(-(i * (p - 1) + j));
  }
  Rational total = prefactor(F) * sum;
  if (F.is_mixed() && chi.is_trivial() && F.e() * p <= max_c) total += wild_special_term(F);
  return total;
}

}  // namespace massform
