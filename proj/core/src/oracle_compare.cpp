#include "massform/oracle_compare.hpp"

#include <map>
#include <tuple>

#include "massform/artin_schreier.hpp"
#include "massform/errors.hpp"
#include "massform/filtered_module.hpp"
#include "massform/mass.hpp"
#include "massform/two_adic.hpp"

namespace massform {

namespace {

using LevelKey = std::pair<std::pair<long, long>, long>;  // ((a, b), level)

LevelKey key_of(const CharClass& chi, long level) {
  return {{chi.a, chi.b}, level};
}

void note_mismatch(OracleComparison& cmp, const std::string& what) {
  cmp.mismatches.push_back(what);
}

}  // namespace

OracleComparison oracle_compare(const LocalField& F, long max_level) {
  bool dyadic = F.is_mixed() && F.p() == 2 && F.f() == 1 && F.e() == 1;
  bool laurent = F.is_equal_char() && (F.p() == 2 || F.p() == 3);
  if (!dyadic && !laurent)
    raise(Errc::UnsupportedField,
          "concrete oracles cover Q_2 and F_q((T)) with p in {2, 3} only");
  if (dyadic && max_level != F.e() * F.p())
    raise(Errc::LevelOutOfRange, "the dyadic census is complete at level e*p = 2");

  OracleComparison cmp;
  CharClass w = omega(F);

  // concrete census: (chi, level) -> line count
  std::map<LevelKey, BigInt> concrete;
  if (dyadic) {
    for (const TwoAdicClassRep& rep : q2_square_classes()) {
      if (rep.representative == 1) continue;  // the zero class is not a line
      concrete[key_of(w, rep.level)] += 1;
      if (!rep.is_unramified) {
        long c = q2_extension_c(rep.representative);
        if (c != rep.level)
          note_mismatch(cmp, "discriminant level of " + std::to_string(rep.representative) +
                                 " is " + std::to_string(c) + ", filtration level " +
                                 std::to_string(rep.level));
      }
    }
  } else {
    for (const LineRecord& rec : as_stable_lines(F, max_level))
      concrete[key_of(rec.chi, rec.level)] += 1;
  }

  // synthetic module census over the same window
  FilteredModule W =
      build_module(F, F.is_mixed() ? std::optional<long>() : std::optional<long>(max_level));
  std::map<LevelKey, BigInt> module_census;
  for (const CharClass& chi : enumerate_chars(F))
    for (const LineRecord& rec : enumerate_stable_lines(W, chi))
      module_census[key_of(rec.chi, rec.level)] += 1;

  // merge keys, fill the formula column, and compare
  std::map<LevelKey, std::pair<BigInt, BigInt>> merged;
  for (const auto& [k, n] : concrete) merged[k].first = n;
  for (const auto& [k, n] : module_census) merged[k].second = n;

  for (const auto& [k, counts] : merged) {
    CensusRow row;
    row.chi = CharClass(k.first.first, k.first.second, F.char_modulus());
    row.level = k.second;
    row.lines_concrete = counts.first;
    row.lines_module = counts.second;
    if (row.level == 0) {
      row.lines_formula = row.chi == w ? 1 : 0;
    } else {
      BigInt per_line(row.chi == w ? 1 : F.p());
      row.lines_formula = count_by_level(F, row.chi, row.level) / per_line;
    }
    if (row.lines_concrete != row.lines_module || row.lines_concrete != row.lines_formula)
      note_mismatch(cmp, "line counts disagree at chi=" + row.chi.to_string() +
                             " level=" + std::to_string(row.level));
    cmp.total_lines += static_cast<long>(row.lines_concrete);
    cmp.census.push_back(std::move(row));
  }

  // masses: weigh each concrete ramified line by p (1 for omega) copies
  // of q^-level, then compare against the closed forms
  for (const CharClass& chi : enumerate_chars(F)) {
    MassRow mr;
    mr.chi = chi;
    Rational per_line(chi == w ? 1 : F.p());
    for (const auto& [k, n] : concrete) {
      if (k.first != std::make_pair(chi.a, chi.b) || k.second == 0) continue;
      mr.mass_concrete += Rational(n) * per_line * F.q_pow(-k.second);
    }
    mr.mass_closed_form = F.is_mixed() ? contribution(F, chi).total
                                       : contribution_truncated(F, chi, max_level);
    if (mr.mass_concrete != mr.mass_closed_form)
      note_mismatch(cmp, "mass disagrees for chi=" + chi.to_string() + ": oracle " +
                             mr.mass_concrete.to_string() + ", closed form " +
                             mr.mass_closed_form.to_string());
    cmp.total_mass += mr.mass_concrete;
    cmp.masses.push_back(std::move(mr));
  }

  return cmp;
}

}  // namespace massform
