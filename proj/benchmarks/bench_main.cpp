#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "specjump/factor.hpp"
#include "specjump/oracle.hpp"
#include "specjump/parse.hpp"
#include "specjump/resolver.hpp"
#include "specjump/spectrum.hpp"

namespace {

using namespace specjump;

const std::vector<std::string> kGerms{"x^2 + y^3", "x^5 + y^5", "x^3 + y^7",
                                      "(y^2 - x^3)^2 - 4*x^5*y - x^7"};

void BM_Resolve(benchmark::State& state) {
  const Poly2 f = parse_poly(kGerms[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(resolve_germ(f));
  state.SetLabel(kGerms[static_cast<std::size_t>(state.range(0))]);
}
BENCHMARK(BM_Resolve)->DenseRange(0, 3);

void BM_SpectrumTable(benchmark::State& state) {
  const ResolutionData data = resolve_germ(parse_poly(kGerms[static_cast<std::size_t>(state.range(0))]));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_table(data));
  state.SetLabel(kGerms[static_cast<std::size_t>(state.range(0))]);
}
BENCHMARK(BM_SpectrumTable)->DenseRange(0, 3);

void BM_InnerSpectrum(benchmark::State& state) {
  const ResolutionData data = resolve_germ(parse_poly(kGerms[static_cast<std::size_t>(state.range(0))]));
  for (auto _ : state) benchmark::DoNotOptimize(inner_spectrum(data));
  state.SetLabel(kGerms[static_cast<std::size_t>(state.range(0))]);
}
BENCHMARK(BM_InnerSpectrum)->DenseRange(0, 3);

// Colength of x^2 + y^b just below 1, where the ideal is deepest.
void BM_Colength(benchmark::State& state) {
  const long b = state.range(0);
  const ResolutionData data = resolve_germ(Poly2::monomial(2, 0) + Poly2::monomial(0, static_cast<unsigned>(b)));
  const Rational alpha(2 * b - 1, 2 * b);
  for (auto _ : state) benchmark::DoNotOptimize(colength(data, alpha));
}
BENCHMARK(BM_Colength)->Arg(3)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_FactorCyclotomic(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const UniPoly q = UniPoly::monomial(n) - UniPoly(Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_rationals(q));
}
BENCHMARK(BM_FactorCyclotomic)->Arg(6)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
