#include <benchmark/benchmark.h>

#include <random>

#include "isobound/convergence.hpp"
#include "isobound/discretize.hpp"
#include "isobound/eigensolve.hpp"
#include "isobound/specfun.hpp"

namespace {

using isobound::Domain;

Domain disk() { return Domain::ball(2, 1.0); }

void BM_BuildAndAssemble(benchmark::State& state) {
  const double h = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto a = isobound::assemble(isobound::build_grid(disk(), h));
    benchmark::DoNotOptimize(a.nonzeros());
  }
}
BENCHMARK(BM_BuildAndAssemble)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_MatVec(benchmark::State& state) {
  const auto a = isobound::assemble(
      isobound::build_grid(disk(), 1.0 / static_cast<double>(state.range(0))));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(a.size()), y(a.size());
  for (auto& v : x) v = u(rng);
  for (auto _ : state) {
    a.multiply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.nonzeros()));
}
BENCHMARK(BM_MatVec)->Arg(64)->Arg(256);

void BM_GroundState(benchmark::State& state) {
  const auto a = isobound::assemble(
      isobound::build_grid(disk(), 1.0 / static_cast<double>(state.range(0))));
  for (auto _ : state) {
    auto s = isobound::smallest_eigenpairs(a, 1);
    benchmark::DoNotOptimize(s.eigenvalues.front());
  }
  state.counters["N"] = static_cast<double>(a.size());
}
BENCHMARK(BM_GroundState)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_LowestSix(benchmark::State& state) {
  const auto a = isobound::assemble(isobound::build_grid(Domain::box({0, 0}, {1, 1}), 1.0 / 32));
  for (auto _ : state) benchmark::DoNotOptimize(isobound::smallest_eigenpairs(a, 6).iterations);
}
BENCHMARK(BM_LowestSix)->Unit(benchmark::kMillisecond);

void BM_RefineDisk(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(isobound::refine(disk(), 1.0 / 8, 3).extrapolated);
}
BENCHMARK(BM_RefineDisk)->Unit(benchmark::kMillisecond);

void BM_FirstZero(benchmark::State& state) {
  const double order = static_cast<double>(state.range(0)) / 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(isobound::first_zero(order).value);
}
BENCHMARK(BM_FirstZero)->Arg(-1)->Arg(0)->Arg(1)->Arg(10);

void BM_BesselSeries(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x = x > 11.0 ? 0.1 : x + 0.37;
    benchmark::DoNotOptimize(isobound::bessel_j(0.0, x));
  }
}
BENCHMARK(BM_BesselSeries);

}  // namespace

BENCHMARK_MAIN();
