#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "resonance/construct.hpp"
#include "resonance/dirichlet.hpp"
#include "resonance/moments.hpp"
#include "resonance/params.hpp"
#include "resonance/primes.hpp"
#include "resonance/quadform.hpp"
#include "resonance/zeta.hpp"

namespace rs = resonance;

namespace {

const rs::PrimeTable& table() {
  static const rs::PrimeTable t = rs::sieve_primes(2'000'000);
  return t;
}

void BM_Sieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rs::sieve_primes(limit).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sieve)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_GalRatio(benchmark::State& state) {
  const rs::ResonatorSet set = rs::gal_divisor_set(table(), static_cast<double>(state.range(0)), 3, 10'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(rs::resonance_ratio(set, 0.75).ratio);
  state.counters["size"] = static_cast<double>(set.size());
}
BENCHMARK(BM_GalRatio)->Arg(13)->Arg(19)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_NearHalfRatio(benchmark::State& state) {
  const rs::ConstructionParams params = rs::near_half_defaults(1e8, 0.6);
  const rs::ResonatorSet set = rs::enumerate_support(table(), params, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rs::resonance_ratio(set, 0.6).ratio);
  state.counters["size"] = static_cast<double>(set.size());
}
BENCHMARK(BM_NearHalfRatio)->Arg(1000)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_GridEvaluation(benchmark::State& state) {
  const rs::DirichletSeries series = rs::DirichletSeries::integers(0.5, static_cast<std::uint64_t>(state.range(0)));
  std::vector<std::complex<double>> out(4096);
  for (auto _ : state) {
    series.evaluate_grid(5000.0, 0.01, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<std::int64_t>(out.size()));
}
BENCHMARK(BM_GridEvaluation)->Arg(1000)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_ZetaApprox(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  double t = 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rs::zeta_approx(0.5, t, x));
    t += 0.37;
    if (t > x) t = 100.0;
  }
}
BENCHMARK(BM_ZetaApprox)->Arg(1000)->Arg(10'000);

void BM_ZetaOracle(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rs::zeta_oracle(0.5, t));
}
BENCHMARK(BM_ZetaOracle)->Arg(100)->Arg(10'000);

void BM_BumpMoments(benchmark::State& state) {
  const rs::ResonatorSet set = rs::gal_divisor_set(table(), 5, 2, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(rs::bump_moments(set, 1.0, 5000.0).certificate);
}
BENCHMARK(BM_BumpMoments)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
