#include <benchmark/benchmark.h>

#include "pqtrig/convexity.hpp"

using namespace pqtrig;

namespace {

TargetFunction make_target(FunctionTag tag) { return TargetFunction(tag, PQParams(4.0, 3.0)); }

void BM_AbConvexSerial(benchmark::State& state, FunctionTag tag) {
  const auto f = make_target(tag);
  const auto grid = GridSpec::over(f.suite_domain(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::check_ab_convex(f, 2.0, 2.0, grid, 1e-9, Direction::convex));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * (state.range(0) - 1) / 2);
}

void BM_AbConvexParallel(benchmark::State& state, FunctionTag tag) {
  const auto f = make_target(tag);
  const auto grid = GridSpec::over(f.suite_domain(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_ab_convex(f, 2.0, 2.0, grid, 1e-9, Direction::convex));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * (state.range(0) - 1) / 2);
}

void BM_CriterionSerial(benchmark::State& state, FunctionTag tag) {
  const auto f = make_target(tag);
  const auto grid = GridSpec::over(f.suite_domain(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::check_derivative_criterion(f, 2.0, 2.0, grid, 1e-9));
  }
}

void BM_CriterionParallel(benchmark::State& state, FunctionTag tag) {
  const auto f = make_target(tag);
  const auto grid = GridSpec::over(f.suite_domain(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_derivative_criterion(f, 2.0, 2.0, grid, 1e-9));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_AbConvexSerial, arcsin, FunctionTag::arcsin_pq)->Arg(20)->Arg(80);
BENCHMARK_CAPTURE(BM_AbConvexParallel, arcsin, FunctionTag::arcsin_pq)->Arg(20)->Arg(80);
BENCHMARK_CAPTURE(BM_AbConvexSerial, sin, FunctionTag::sin_pq)->Arg(20)->Arg(80);
BENCHMARK_CAPTURE(BM_AbConvexParallel, sin, FunctionTag::sin_pq)->Arg(20)->Arg(80);
BENCHMARK_CAPTURE(BM_CriterionSerial, sin, FunctionTag::sin_pq)->Arg(200);
BENCHMARK_CAPTURE(BM_CriterionParallel, sin, FunctionTag::sin_pq)->Arg(200);

BENCHMARK_MAIN();
