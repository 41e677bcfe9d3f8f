#include <benchmark/benchmark.h>

#include "massform/aggregates.hpp"
#include "massform/artin_schreier.hpp"
#include "massform/filtered_module.hpp"
#include "massform/mass.hpp"

namespace {

using namespace massform;

void BM_TotalMassMixed(benchmark::State& state) {
  LocalField F = make_field(CharKind::MixedChar, 7, 2, 4);
  for (auto _ : state) {
    Rational m = total_mass(F);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_TotalMassMixed);

void BM_TotalMassEqual(benchmark::State& state) {
  LocalField F = make_field(CharKind::EqualChar, 7, 2);
  for (auto _ : state) {
    Rational m = total_mass(F);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_TotalMassEqual);

void BM_ClosedFormEqualChar(benchmark::State& state) {
  LocalField F = make_field(CharKind::EqualChar, 7, 2);
  for (auto _ : state) {
    Rational m = contribution_closed_equal_char(F, 3);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_ClosedFormEqualChar);

void BM_EnumerateLines(benchmark::State& state) {
  LocalField F = make_field(CharKind::EqualChar, 2, 1);
  FilteredModule W = build_module(F, state.range(0));
  CharClass chi = CharClass::trivial(F.char_modulus());
  for (auto _ : state) {
    auto lines = enumerate_stable_lines(W, chi);
    benchmark::DoNotOptimize(lines);
  }
}
BENCHMARK(BM_EnumerateLines)->Arg(9)->Arg(17)->Arg(25);

void BM_ClassNormalize(benchmark::State& state) {
  ASOracle oracle(3, 1);
  const GaloisField& l = oracle.coeff_field();
  ASOracle::Rep rep;
  // nested p-divisible pole orders force repeated folding
  rep[27] = l.from_int(2);
  rep[18] = l.from_int(1);
  rep[9] = l.from_int(2);
  rep[5] = l.from_int(1);
  rep[0] = l.from_int(1);
  for (auto _ : state) {
    auto n = oracle.normalize(rep);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_ClassNormalize);

void BM_StableLines(benchmark::State& state) {
  LocalField F = make_field(CharKind::EqualChar, 3, 1);
  for (auto _ : state) {
    auto lines = as_stable_lines(F, 8);
    benchmark::DoNotOptimize(lines);
  }
}
BENCHMARK(BM_StableLines);

}  // namespace

BENCHMARK_MAIN();
