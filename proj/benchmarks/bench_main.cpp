#include <benchmark/benchmark.h>

#include "wptk/hamflow.hpp"
#include "wptk/schrodinger.hpp"
#include "wptk/wavefront.hpp"
#include "wptk/wpt.hpp"

using namespace wptk;

static void BM_WptSlice(benchmark::State& state) {
  const Grid1D g = make_grid(-32, 32, static_cast<std::size_t>(state.range(0)));
  const SampledField f = sample_signal(signal::Gaussian{0, 1, 2}, g);
  const Window phi(AnalyticWindow::scaled(WindowFamily::gaussian(0.25), 4.0));
  const UniformAxis xs = node_axis(g, g.size() / 64);
  const FrequencyGrid xis = dual_frequency_grid(g, -8, 8);
  for (auto _ : state) benchmark::DoNotOptimize(wpt_slice(phi, f, xs, xis));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(xs.count));
}
BENCHMARK(BM_WptSlice)->RangeMultiplier(4)->Range(1 << 12, 1 << 16)->Unit(benchmark::kMillisecond);

static void BM_WptDirect(benchmark::State& state) {
  const Grid1D g = make_grid(-32, 32, 4096);
  const SampledField f = sample_signal(signal::Gaussian{}, g);
  const Window phi(AnalyticWindow::scaled(WindowFamily::hermite(2, 0.25), 16.0));
  std::vector<PhasePoint> pts;
  for (int i = 0; i < 64; ++i) pts.push_back({-2 + i / 16.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(wpt_direct(phi, f, pts));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pts.size()));
}
BENCHMARK(BM_WptDirect)->Unit(benchmark::kMicrosecond);

static void BM_SplitStep(benchmark::State& state) {
  const Grid1D g = make_grid(-32, 32, static_cast<std::size_t>(state.range(0)));
  const SampledField u0 = sample_signal(signal::Gaussian{}, g);
  const PotentialModel v = PotentialModel::subquad(1);
  for (auto _ : state) benchmark::DoNotOptimize(split_step_evolve(u0, v, 0.5, 256));
}
BENCHMARK(BM_SplitStep)->RangeMultiplier(4)->Range(1 << 12, 1 << 16)->Unit(benchmark::kMillisecond);

static void BM_Flow(benchmark::State& state) {
  const PotentialModel v = PotentialModel::subquad(1);
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_flow(v, 1.0, 0.3, 64, 1.0, steps));
}
BENCHMARK(BM_Flow)->Arg(256)->Arg(4096)->Unit(benchmark::kMicrosecond);

static void BM_DiracDetection(benchmark::State& state) {
  DetectionRegion region;
  region.x0 = {-2, -1, 0, 1, 2};
  std::vector<double> lambdas;
  for (int k = 4; k <= 12; ++k) lambdas.push_back(std::ldexp(1.0, k));
  const std::vector<WindowFamily> ws{WindowFamily::gaussian(0.25)};
  for (auto _ : state) benchmark::DoNotOptimize(detect_wavefront_grid(signal::Dirac{}, ws, region, lambdas));
}
BENCHMARK(BM_DiracDetection)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
