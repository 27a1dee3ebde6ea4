#include <benchmark/benchmark.h>

#include "probrob/gridspec.hpp"
#include "probrob/indicators.hpp"
#include "probrob/margins.hpp"
#include "probrob/reuse.hpp"
#include "probrob/rng.hpp"
#include "probrob/segfun.hpp"

using namespace probrob;

namespace {

SamplingProblem layered(std::size_t d) {
  return {Shape::vector(d), NormKind::kL2, layered_oracle(20, 11, 19)};
}

void BM_Locate(benchmark::State& state) {
  const auto scheme = state.range(0) == 0 ? GridScheme::kUniform : GridScheme::kGeometric;
  const auto grid = build_grid(scheme, 20.0, 1.0, 100000);
  SeededStream rng(1, 0);
  std::vector<double> radii(4096);
  for (double& r : radii) r = rng.uniform();
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(locate(grid, radii[k++ & 4095]));
  }
}
BENCHMARK(BM_Locate)->Arg(0)->Arg(1);

void BM_Merge(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto grid = build_grid(GridScheme::kGeometric, 20.0, 1.0, m);
  const auto a = sample_direction(layered(10), grid, 1, 0).segments;
  SegFun h = a;
  for (std::size_t k = 1; k < 64; ++k) {
    MergeCostCounter cost;
    h = merge(sample_direction(layered(10), grid, 1, k).segments, h, cost);
  }
  for (auto _ : state) {
    MergeCostCounter cost;
    benchmark::DoNotOptimize(merge(a, h, cost));
  }
  state.counters["rows"] = static_cast<double>(h.row_count());
}
BENCHMARK(BM_Merge)->Arg(1000)->Arg(1000000);

void BM_RadialSampling(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto grid = build_grid(GridScheme::kGeometric, 2.5, 1.0, 39);
  const auto problem = layered(d);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_direction(problem, grid, 1, k++));
  }
}
BENCHMARK(BM_RadialSampling)->Arg(10)->Arg(100)->Arg(1000);

void BM_Ssra(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto grid = build_grid(GridScheme::kGeometric, 20.0, 1.0, 1000000);
  for (auto _ : state) benchmark::DoNotOptimize(ssra(n, grid, layered(10), 1));
}
BENCHMARK(BM_Ssra)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_Hsra(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto grid = build_grid(GridScheme::kGeometric, 20.0, 1.0, 1000000);
  for (auto _ : state) benchmark::DoNotOptimize(hsra(n, grid, layered(10), 1));
}
BENCHMARK(BM_Hsra)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_ComplexMargin(benchmark::State& state) {
  Eigen::MatrixXd a(2, 2);
  a << 0, 1, -1, -0.4;
  const LtiPlant plant(a, (Eigen::MatrixXd(2, 1) << 0, 1).finished(),
                       (Eigen::MatrixXd(1, 2) << 1, 0).finished());
  for (auto _ : state) benchmark::DoNotOptimize(complex_margin(plant, PoleRegion::half_plane(0)));
}
BENCHMARK(BM_ComplexMargin)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
