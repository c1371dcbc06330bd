#include <benchmark/benchmark.h>

#include "hlcbs/closedform.hpp"
#include "hlcbs/hyper.hpp"
#include "hlcbs/polyfam.hpp"
#include "hlcbs/series.hpp"
#include "hlcbs/verify.hpp"

using namespace hlcbs;
using exact::Rational;

static void BM_PhiSeries(benchmark::State& state) {
  const auto prec = static_cast<mpfr_prec_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(series::phi_numeric({-3, Rational(5, 4), Rational(1, 2), prec, series::kDefaultMaxTerms}));
}
BENCHMARK(BM_PhiSeries)->Arg(64)->Arg(128)->Arg(512);

static void BM_PhiSeriesNearOne(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(series::phi_numeric({1, 1, Rational(19, 20), 128, series::kDefaultMaxTerms}));
}
BENCHMARK(BM_PhiSeriesNearOne);

static void BM_PfqThreeTwo(benchmark::State& state) {
  const auto prec = static_cast<mpfr_prec_t>(state.range(0));
  const hyper::PFQParams params{{1, Rational(5, 4), Rational(5, 4)}, {Rational(7, 4), Rational(9, 4)}, Rational(1, 4)};
  for (auto _ : state) benchmark::DoNotOptimize(hyper::pfq_eval(params, prec));
}
BENCHMARK(BM_PfqThreeTwo)->Arg(128)->Arg(1024);

static void BM_PhiNegClosed(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closedform::phi_neg_closed(k, Rational(7, 3), Rational(1, 2), 128));
}
BENCHMARK(BM_PhiNegClosed)->Arg(1)->Arg(8);

static void BM_ZetaExact(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  polyfam::p_a_poly(k);  // warm the cache; the timing is the assembly
  for (auto _ : state) benchmark::DoNotOptimize(closedform::zeta_exact(k, Rational(7, 2)));
}
BENCHMARK(BM_ZetaExact)->Arg(4)->Arg(16);

static void BM_EulerianOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(polyfam::eulerian_gf_oracle(n));
}
BENCHMARK(BM_EulerianOracle)->Arg(6)->Arg(10);

static void BM_CoefficientGap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify::euler_coefficient_gap(n, Rational(17, 7)));
}
BENCHMARK(BM_CoefficientGap)->Arg(10)->Arg(30);

static void BM_VerifySuite(benchmark::State& state) {
  verify::VerifyConfig cfg;
  cfg.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(verify::run_all(cfg));
}
BENCHMARK(BM_VerifySuite)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
