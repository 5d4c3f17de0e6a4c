#include <benchmark/benchmark.h>

#include "padic/padic.hpp"

using namespace padic;

static void BM_SingularFourier(benchmark::State& state) {
  const Prime p(3);
  const auto f = QahDistribution::pi_alpha_log({-0.7, 0.3}, NormedMultChar::trivial(p), 2);
  const auto phi = random_testfn(p, 2, -2, 1);
  const PadicPoint t = PadicPoint(2) * PadicPoint(power(p, -state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(singular_fourier({f, phi, t, std::nullopt}));
}
BENCHMARK(BM_SingularFourier)->DenseRange(0, 8, 2);

static void BM_SingularRamified(benchmark::State& state) {
  const Prime p(5);
  const auto f = QahDistribution::pi_alpha_log(1.5, NormedMultChar::quadratic(p), 1);
  const auto phi = random_testfn(p, 1, -1, 2);
  const PadicPoint t = PadicPoint(2) * PadicPoint(power(p, -state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(singular_fourier({f, phi, t, std::nullopt}));
}
BENCHMARK(BM_SingularRamified)->DenseRange(0, 6, 2);

static void BM_BruteForceOracle(benchmark::State& state) {
  const Prime p(3);
  const auto f = QahDistribution::pi_alpha_log(1.5, NormedMultChar::quadratic(p), 1);
  const auto phi = random_testfn(p, 1, -1, 3);
  const SingularIntegralRequest req{f, phi, PadicPoint(1, 27), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle(req, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BruteForceOracle)->DenseRange(0, 3);

static void BM_Fourier(benchmark::State& state) {
  const Prime p(2);
  const auto phi = random_testfn(p, state.range(0), -state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(fourier(phi));
  state.SetComplexityN(static_cast<std::int64_t>(phi.size()));
}
BENCHMARK(BM_Fourier)->DenseRange(1, 5)->Complexity();

static void BM_GammaPi(benchmark::State& state) {
  const MultChar c{{1.5, 0.2}, NormedMultChar::quadratic(Prime(static_cast<std::int64_t>(state.range(0))))};
  for (auto _ : state) benchmark::DoNotOptimize(gamma_pi(c, 3));
}
BENCHMARK(BM_GammaPi)->Arg(3)->Arg(5)->Arg(7)->Arg(11);

static void BM_Bernoulli(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Bernoulli)->Arg(20)->Arg(60);
BENCHMARK_MAIN();
