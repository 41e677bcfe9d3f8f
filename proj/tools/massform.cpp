// massform: per-character mass bookkeeping for degree-p extensions of
// local fields, with exact rational output and concrete cross-checks.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "massform/aggregates.hpp"
#include "massform/artin_schreier.hpp"
#include "massform/char_group.hpp"
#include "massform/errors.hpp"
#include "massform/field.hpp"
#include "massform/filtered_module.hpp"
#include "massform/mass.hpp"
#include "massform/oracle_compare.hpp"
#include "massform/two_adic.hpp"

namespace {

using massform::AggregateReport;
using massform::CharClass;
using massform::CharKind;
using massform::ContributionBreakdown;
using massform::DomainError;
using massform::LocalField;
using massform::Rational;

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct Options {
  std::string char_kind;
  long p = 0;
  long f = 0;
  std::optional<long> e;
  std::optional<long> omega_b;

  std::vector<long> chi;
  std::optional<long> vbar;
  std::optional<long> order;
  std::vector<long> gen;
  std::optional<long> max_c;
  std::optional<long> max_level;
  long max_i = 10000;
  std::string verify_case;

  std::string format = "table";
  int decimal_digits = 6;

  bool json_mode() const { return format == "json"; }

  LocalField field() const {
    CharKind kind = char_kind == "0" ? CharKind::MixedChar : CharKind::EqualChar;
    return make_field(kind, p, f, e, omega_b);
  }

  CharClass parse_pair(const std::vector<long>& v, const LocalField& F,
                       const std::string& flag) const {
    if (v.size() != 2) throw CLI::ValidationError(flag + " needs two comma-separated integers");
    return CharClass(v[0], v[1], F.char_modulus());
  }
};

// ---- rendering helpers ------------------------------------------------

std::string mass_line(const Rational& r, int digits) {
  if (r.is_integer()) return "mass = " + r.num().str() + " (" + r.to_fraction_string() + ")";
  return "mass = " + r.to_string() + " (" + r.to_decimal_string(digits) + ")";
}

json rational_json(const Rational& r) {
  return json{{"num", r.num().str()}, {"den", r.den().str()}};
}

json field_json(const LocalField& F) {
  json j{{"kind", F.is_mixed() ? "mixed" : "equal"}, {"p", F.p()}, {"f", F.f()}};
  if (F.has_e()) j["e"] = F.e();
  if (F.omega_unit_index().has_value()) j["omega_b"] = *F.omega_unit_index();
  return j;
}

json char_json(const CharClass& chi) { return json::array({chi.a, chi.b}); }

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit_aggregate(const Options& opt, const LocalField& F, const AggregateReport& rep,
                    const std::string& command) {
  if (opt.json_mode()) {
    json members = json::array();
    for (const auto& [chi, share] : rep.per_char)
      members.push_back(json{{"chi", char_json(chi)},
                             {"vbar", massform::vbar(chi).value},
                             {"mass", rational_json(share)}});
    emit_json(json{{"command", command},
                   {"field", field_json(F)},
                   {"selector", rep.selector},
                   {"members", members},
                   {"mass", rational_json(rep.mass)},
                   {"decimal", rep.mass.to_decimal_string(opt.decimal_digits)}});
    return;
  }
  std::cout << mass_line(rep.mass, opt.decimal_digits) << "\n";
  for (const auto& [chi, share] : rep.per_char)
    std::cout << "  chi=" << chi.to_string() << " vbar=" << massform::vbar(chi).value
              << " mass=" << share.to_fraction_string() << "\n";
}

// ---- subcommand bodies ------------------------------------------------

void run_contribution(const Options& opt) {
  LocalField F = opt.field();
  bool has_chi = !opt.chi.empty();
  bool has_vbar = opt.vbar.has_value();
  if (has_chi == has_vbar)
    throw CLI::ValidationError("contribution needs exactly one of --chi or --vbar");

  if (has_chi) {
    CharClass chi = opt.parse_pair(opt.chi, F, "--chi");
    ContributionBreakdown br = contribution(F, chi);
    if (opt.json_mode()) {
      json terms = json::array();
      for (const auto& t : br.per_index_terms)
        terms.push_back(json{{"i", t.i}, {"j", t.j}, {"term", rational_json(t.term)}});
      json j{{"command", "contribution"},
             {"field", field_json(F)},
             {"chi", char_json(chi)},
             {"vbar", massform::vbar(chi).value},
             {"prefactor", rational_json(br.prefactor)},
             {"terms", terms},
             {"mass", rational_json(br.total)},
             {"decimal", br.total.to_decimal_string(opt.decimal_digits)}};
      if (br.special_term.has_value()) j["special"] = rational_json(*br.special_term);
      emit_json(j);
      return;
    }
    std::cout << "chi=" << chi.to_string() << " vbar=" << massform::vbar(chi).value << "\n";
    for (const auto& t : br.per_index_terms)
      std::cout << "  i=" << t.i << " j=" << t.j << " term=" << t.term.to_fraction_string()
                << "\n";
    std::cout << "prefactor = " << br.prefactor.to_fraction_string() << "\n";
    if (br.special_term.has_value())
      std::cout << "special = " << br.special_term->to_fraction_string() << "\n";
    std::cout << mass_line(br.total, opt.decimal_digits) << "\n";
    return;
  }

  // all characters in one valuation class
  long m = F.char_modulus();
  massform::ValClass v(*opt.vbar, m);
  AggregateReport rep;
  rep.selector = "vbar " + std::to_string(v.value);
  for (const CharClass& chi : enumerate_chars(F)) {
    if (massform::vbar(chi) != v) continue;
    Rational share = contribution(F, chi).total;
    rep.mass += share;
    rep.per_char.emplace_back(chi, share);
  }
  emit_aggregate(opt, F, rep, "contribution");
}

void run_total(const Options& opt) {
  LocalField F = opt.field();
  Rational mass = total_mass(F);
  if (opt.json_mode()) {
    emit_json(json{{"command", "total"},
                   {"field", field_json(F)},
                   {"mass", rational_json(mass)},
                   {"decimal", mass.to_decimal_string(opt.decimal_digits)}});
    return;
  }
  std::cout << mass_line(mass, opt.decimal_digits) << "\n";
}

void run_cyclic(const Options& opt) {
  LocalField F = opt.field();
  AggregateReport rep = cyclic_mass(F);
  if (opt.json_mode()) {
    emit_json(json{{"command", "cyclic"},
                   {"field", field_json(F)},
                   {"chi", char_json(rep.per_char.at(0).first)},
                   {"mass", rational_json(rep.mass)},
                   {"decimal", rep.mass.to_decimal_string(opt.decimal_digits)}});
    return;
  }
  std::cout << mass_line(rep.mass, opt.decimal_digits) << "\n";
}

void run_by_gamma(const Options& opt) {
  LocalField F = opt.field();
  if (!opt.order.has_value()) throw CLI::ValidationError("by-gamma needs --order");
  emit_aggregate(opt, F, mass_by_closure_order(F, *opt.order), "by-gamma");
}

void run_by_subfield(const Options& opt) {
  LocalField F = opt.field();
  if (opt.gen.empty()) throw CLI::ValidationError("by-subfield needs --gen");
  CharClass gen = opt.parse_pair(opt.gen, F, "--gen");
  emit_aggregate(opt, F, mass_by_subfield(F, gen), "by-subfield");
}

void run_unramified_tame(const Options& opt) {
  LocalField F = opt.field();
  emit_aggregate(opt, F, mass_unramified_tame(F), "unramified-tame");
}

void run_count(const Options& opt) {
  LocalField F = opt.field();
  if (!opt.max_c.has_value()) throw CLI::ValidationError("count needs --max-c");
  std::optional<CharClass> chi;
  if (!opt.chi.empty()) chi = opt.parse_pair(opt.chi, F, "--chi");

  long hi = F.is_mixed() ? std::min(*opt.max_c, F.e() * F.p()) : *opt.max_c;
  std::vector<std::pair<long, massform::BigInt>> rows;
  massform::BigInt total = 0;
  for (long c = 1; c <= hi; ++c) {
    massform::BigInt at_c = 0;
    if (chi.has_value()) {
      at_c = count_by_level(F, *chi, c);
    } else {
      for (const CharClass& x : enumerate_chars(F)) at_c += count_by_level(F, x, c);
    }
    if (at_c != 0) rows.emplace_back(c, at_c);
    total += at_c;
  }

  if (opt.json_mode()) {
    json levels = json::array();
    for (const auto& [c, n] : rows) levels.push_back(json{{"c", c}, {"count", n.str()}});
    json j{{"command", "count"},
           {"field", field_json(F)},
           {"levels", levels},
           {"total", total.str()}};
    if (chi.has_value()) j["chi"] = char_json(*chi);
    emit_json(j);
    return;
  }
  for (const auto& [c, n] : rows) std::cout << "c=" << c << " count=" << n.str() << "\n";
  std::cout << "count = " << total.str() << "\n";
}

void run_identity(const Options& opt) {
  bool ok = massform::cyclic_level_identity(opt.p, opt.max_i);
  if (opt.json_mode()) {
    emit_json(json{{"command", "identity"}, {"p", opt.p}, {"max_i", opt.max_i}, {"pass", ok}});
    return;
  }
  if (ok)
    std::cout << "PASS: cyclic tower levels run through (p-1)*(integers prime to p) for i < "
              << opt.max_i << "\n";
  else
    std::cout << "FAIL: cyclic tower level identity broke below i = " << opt.max_i << "\n";
}

LocalField verify_case_field(const Options& opt, long& max_level) {
  if (opt.verify_case == "q2") {
    max_level = 2;
    return make_field(CharKind::MixedChar, 2, 1, 1);
  }
  if (opt.verify_case == "f2t") {
    max_level = opt.max_level.value_or(9);
    return make_field(CharKind::EqualChar, 2, 1);
  }
  if (opt.verify_case == "f3t") {
    max_level = opt.max_level.value_or(8);
    return make_field(CharKind::EqualChar, 3, 1);
  }
  if (opt.verify_case == "module") {
    if (opt.char_kind.empty())
      throw CLI::ValidationError("--case module needs the field flags --char/--p/--f");
    LocalField F = opt.field();
    max_level = F.is_mixed() ? F.e() * F.p() : opt.max_level.value_or(8);
    return F;
  }
  throw CLI::ValidationError("--case must be one of q2, f2t, f3t, module");
}

void run_verify(const Options& opt) {
  long max_level = 0;
  LocalField F = verify_case_field(opt, max_level);

  if (opt.verify_case == "module") {
    // synthetic module against the closed forms, no concrete oracle
    massform::FilteredModule W =
        build_module(F, F.is_mixed() ? std::optional<long>() : std::optional<long>(max_level));
    CharClass w = omega(F);
    std::vector<std::string> mismatches;
    long total_lines = 0;
    Rational total;
    for (const CharClass& chi : enumerate_chars(F)) {
      Rational from_lines = oracle_mass(W, chi);
      Rational closed = F.is_mixed() ? contribution(F, chi).total
                                     : contribution_truncated(F, chi, max_level);
      if (from_lines != closed)
        mismatches.push_back("mass disagrees for chi=" + chi.to_string());
      std::vector<massform::LineRecord> lines = enumerate_stable_lines(W, chi);
      total_lines += static_cast<long>(lines.size());
      total += from_lines;
      // per-level census against the counting formula
      for (long c = 1; c <= max_level; ++c) {
        massform::BigInt expected = count_by_level(F, chi, c);
        massform::BigInt per_line(chi == w ? 1 : F.p());
        massform::BigInt found = 0;
        for (const auto& rec : lines)
          if (rec.level == c) ++found;
        if (found * per_line != expected)
          mismatches.push_back("census disagrees for chi=" + chi.to_string() + " at level " +
                               std::to_string(c));
      }
    }
    bool ok = mismatches.empty();
    if (opt.json_mode()) {
      emit_json(json{{"command", "verify"},
                     {"case", opt.verify_case},
                     {"field", field_json(F)},
                     {"max_level", max_level},
                     {"pass", ok},
                     {"lines", total_lines},
                     {"mass", rational_json(total)},
                     {"mismatches", mismatches}});
      return;
    }
    if (ok)
      std::cout << "PASS: " << enumerate_chars(F).size() << " chars, " << total_lines
                << " lines, module matches closed forms\n";
    else
      for (const std::string& m : mismatches) std::cout << "FAIL: " << m << "\n";
    return;
  }

  massform::OracleComparison cmp = oracle_compare(F, max_level);
  if (opt.json_mode()) {
    emit_json(json{{"command", "verify"},
                   {"case", opt.verify_case},
                   {"field", field_json(F)},
                   {"max_level", max_level},
                   {"pass", cmp.pass()},
                   {"lines", cmp.total_lines},
                   {"mass", rational_json(cmp.total_mass)},
                   {"mismatches", cmp.mismatches}});
    return;
  }
  if (!cmp.pass()) {
    for (const std::string& m : cmp.mismatches) std::cout << "FAIL: " << m << "\n";
    return;
  }
  if (opt.verify_case == "q2")
    std::cout << "PASS: " << cmp.total_lines << " lines, mass " << cmp.total_mass.to_fraction_string()
              << ", discriminant levels ok\n";
  else
    std::cout << "PASS: " << cmp.total_lines << " lines, mass " << cmp.total_mass.to_fraction_string()
              << ", counts ok\n";
}

void run_census(const Options& opt) {
  long max_level = 0;
  LocalField F = verify_case_field(opt, max_level);

  std::vector<massform::LineRecord> records;
  std::vector<std::string> raw;  // q2 uses integer representatives
  if (opt.verify_case == "q2") {
    CharClass w = omega(F);
    for (const auto& rep : massform::q2_square_classes()) {
      if (rep.representative == 1) continue;
      raw.push_back("chi=" + w.to_string() + " level=" + std::to_string(rep.level) +
                    " rep=" + std::to_string(rep.representative));
    }
  } else if (opt.verify_case == "module") {
    massform::FilteredModule W =
        build_module(F, F.is_mixed() ? std::optional<long>() : std::optional<long>(max_level));
    for (const CharClass& chi : enumerate_chars(F))
      for (auto& rec : enumerate_stable_lines(W, chi)) records.push_back(std::move(rec));
  } else {
    records = massform::as_stable_lines(F, max_level);
  }

  if (opt.json_mode()) {
    json recs = json::array();
    if (opt.verify_case == "q2") {
      for (const auto& rep : massform::q2_square_classes()) {
        if (rep.representative == 1) continue;
        recs.push_back(json{{"chi", char_json(omega(F))},
                            {"level", rep.level},
                            {"rep", json::array({rep.representative})}});
      }
    } else {
      for (const auto& rec : records) {
        json coords = json::array();
        for (auto c : rec.coords) coords.push_back(static_cast<int>(c));
        recs.push_back(json{{"chi", char_json(rec.chi)}, {"level", rec.level}, {"rep", coords}});
      }
    }
    emit_json(json{{"command", "census"},
                   {"case", opt.verify_case},
                   {"field", field_json(F)},
                   {"max_level", max_level},
                   {"records", recs}});
    return;
  }
  for (const std::string& line : raw) std::cout << line << "\n";
  for (const auto& rec : records) std::cout << rec.to_string() << "\n";
}

// ---- wiring -----------------------------------------------------------

void add_field_flags(CLI::App* cmd, Options& opt, bool required = true) {
  auto* ck = cmd->add_option("--char", opt.char_kind,
                             "characteristic: 0 (mixed) or p (equal)")
                 ->check(CLI::IsMember({"0", "p"}));
  auto* pp = cmd->add_option("--p", opt.p, "residue characteristic");
  auto* ff = cmd->add_option("--f", opt.f, "residue degree");
  if (required) {
    ck->required();
    pp->required();
    ff->required();
  }
  cmd->add_option("--e", opt.e, "ramification index (mixed characteristic only)");
  cmd->add_option("--omega-b", opt.omega_b, "unit coordinate of omega in the tame basis");
}

void add_output_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  cmd->add_option("--decimal-digits", opt.decimal_digits, "digits in decimal renderings")
      ->check(CLI::Range(0, 50))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact per-character masses of degree-p extensions of local fields"};
  app.require_subcommand(1);

  Options opt;

  auto* c_contribution = app.add_subcommand("contribution", "one character's (or one valuation class's) mass");
  add_field_flags(c_contribution, opt);
  c_contribution->add_option("--chi", opt.chi, "character coordinates a,b")->delimiter(',');
  c_contribution->add_option("--vbar", opt.vbar, "valuation class");
  add_output_flags(c_contribution, opt);

  auto* c_total = app.add_subcommand("total", "mass summed over all characters");
  add_field_flags(c_total, opt);
  add_output_flags(c_total, opt);

  auto* c_cyclic = app.add_subcommand("cyclic", "mass of the cyclic extensions");
  add_field_flags(c_cyclic, opt);
  add_output_flags(c_cyclic, opt);

  auto* c_gamma = app.add_subcommand("by-gamma", "mass by Galois closure order p*n");
  add_field_flags(c_gamma, opt);
  c_gamma->add_option("--order", opt.order, "tame degree n (must divide p-1)");
  add_output_flags(c_gamma, opt);

  auto* c_subfield = app.add_subcommand("by-subfield", "mass by fixed tame cyclic layer");
  add_field_flags(c_subfield, opt);
  c_subfield->add_option("--gen", opt.gen, "subgroup generator a,b")->delimiter(',');
  add_output_flags(c_subfield, opt);

  auto* c_unram = app.add_subcommand("unramified-tame", "mass of extensions with unramified tame layer");
  add_field_flags(c_unram, opt);
  add_output_flags(c_unram, opt);

  auto* c_count = app.add_subcommand("count", "extension counts by discriminant level");
  add_field_flags(c_count, opt);
  c_count->add_option("--chi", opt.chi, "character coordinates a,b")->delimiter(',');
  c_count->add_option("--max-c", opt.max_c, "largest discriminant level");
  add_output_flags(c_count, opt);

  auto* c_verify = app.add_subcommand("verify", "cross-check oracles against the closed forms");
  add_field_flags(c_verify, opt, /*required=*/false);
  c_verify->add_option("--case", opt.verify_case, "q2, f2t, f3t or module")->required();
  c_verify->add_option("--max-level", opt.max_level, "truncation level for series cases");
  add_output_flags(c_verify, opt);

  auto* c_identity = app.add_subcommand("identity", "check the cyclic tower level identity");
  c_identity->add_option("--p", opt.p, "prime")->required();
  c_identity->add_option("--max-i", opt.max_i, "check indices below this bound")
      ->capture_default_str();
  add_output_flags(c_identity, opt);

  auto* c_census = app.add_subcommand("census", "dump the stable-line census");
  add_field_flags(c_census, opt, /*required=*/false);
  c_census->add_option("--case", opt.verify_case, "q2, f2t, f3t or module")->required();
  c_census->add_option("--max-level", opt.max_level, "truncation level for series cases");
  add_output_flags(c_census, opt);

  try {
    app.parse(argc, argv);

    if (c_contribution->parsed()) run_contribution(opt);
    if (c_total->parsed()) run_total(opt);
    if (c_cyclic->parsed()) run_cyclic(opt);
    if (c_gamma->parsed()) run_by_gamma(opt);
    if (c_subfield->parsed()) run_by_subfield(opt);
    if (c_unram->parsed()) run_unramified_tame(opt);
    if (c_count->parsed()) run_count(opt);
    if (c_verify->parsed()) run_verify(opt);
    if (c_identity->parsed()) run_identity(opt);
    if (c_census->parsed()) run_census(opt);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
