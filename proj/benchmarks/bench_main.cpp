#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "hetcorr/chain.hpp"
#include "hetcorr/optimizer.hpp"
#include "hetcorr/rng.hpp"
#include "hetcorr/spectrum.hpp"

namespace {

hetcorr::ChainParams squeezed_chain() {
  hetcorr::ChainParams p;
  p.sq.r = 0.5 * std::log(2.0);
  p.lo.phase = std::numbers::pi / 2;
  p.lo.angular_frequency = 1e9;
  return p;
}

void BM_SampleTrajectories(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  hetcorr::AcquisitionParams acq;
  acq.sample_rate = 1.0;
  acq.duration = static_cast<double>(n);
  acq.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hetcorr::sample_trajectories(squeezed_chain(), acq));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(n) * state.iterations());
}
BENCHMARK(BM_SampleTrajectories)->Arg(1 << 16)->Arg(1 << 20);

void BM_GaussianStream(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> buf(n);
  for (auto _ : state) {
    hetcorr::GaussianStream::fill(buf, 7, 0);
    benchmark::DoNotOptimize(buf.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(n) * state.iterations());
}
BENCHMARK(BM_GaussianStream)->Arg(1 << 16)->Arg(1 << 20);

void BM_WelchCsd(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> x(n);
  std::vector<double> y(n);
  hetcorr::GaussianStream::fill(x, 3, 0);
  hetcorr::GaussianStream::fill(y, 3, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hetcorr::estimate_csd(x, y, 1.0, hetcorr::EstimatorConfig{}));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(n) * state.iterations());
}
BENCHMARK(BM_WelchCsd)->Arg(1 << 16)->Arg(1 << 20);

void BM_Fft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> buf(n);
  hetcorr::GaussianStream::fill(buf, 5, 0);
  std::vector<std::complex<double>> data(n);
  for (auto _ : state) {
    for (std::size_t i = 0; i < n; ++i) data[i] = buf[i];
    hetcorr::detail::fft_pow2(data);
    benchmark::DoNotOptimize(data.data());
  }
}
BENCHMARK(BM_Fft)->Arg(1 << 12)->Arg(1 << 16);

void BM_OptimalR(benchmark::State& state) {
  const hetcorr::NoiseBudget budget{1.0, 0.125, {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hetcorr::optimal_r(budget));
  }
}
BENCHMARK(BM_OptimalR);

}  // namespace

BENCHMARK_MAIN();
