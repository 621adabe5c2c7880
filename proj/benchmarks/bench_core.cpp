#include "lrn/intmath.hpp"
#include "lrn/oracle.hpp"
#include "lrn/quadfield.hpp"
#include "lrn/solver.hpp"
#include "lrn/thue.hpp"

#include <benchmark/benchmark.h>

using namespace lrn;

static void BM_FactorSemiprime(benchmark::State& state) {
  const Int n = Int("1000000000039") * Int("999999999989");
  for (auto _ : state) benchmark::DoNotOptimize(factor(n));
}
BENCHMARK(BM_FactorSemiprime);

// Uncached: reduced-form enumeration for a single discriminant.
static void BM_ReducedForms(benchmark::State& state) {
  const std::int64_t D = -4 * state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_forms(D));
}
BENCHMARK(BM_ReducedForms)->Arg(110)->Arg(10'002)->Arg(1'000'001);

static void BM_ClassRepresentatives(benchmark::State& state) {
  const auto field = QuadField::make(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(class_representatives(field));
}
BENCHMARK(BM_ClassRepresentatives)->Arg(110)->Arg(1'001);

// Cubic Thue equation from the (2, 55) reduction, swept over growing boxes.
static void BM_ThueCubic(benchmark::State& state) {
  const auto branches = case2_reduce(make_instance(2, 55), 3);
  for (auto _ : state) {
    for (const auto& b : branches) benchmark::DoNotOptimize(thue_solve_bounded(b.problem, state.range(0)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ThueCubic)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Unit(benchmark::kMillisecond);

static void BM_Case3Scan(benchmark::State& state) {
  const auto inst = make_instance(5, 61);
  for (auto _ : state) benchmark::DoNotOptimize(case3_solve(inst, state.range(0)));
}
BENCHMARK(BM_Case3Scan)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_SolvePair(benchmark::State& state) {
  const auto inst = make_instance(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst));
}
BENCHMARK(BM_SolvePair)->Args({2, 1})->Args({2, 55})->Args({2, 67})->Unit(benchmark::kMillisecond);

static void BM_OracleBruteForce(benchmark::State& state) {
  OracleConfig cfg;
  cfg.value_cap = Int(1'000'000'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force(2, 19, cfg));
}
BENCHMARK(BM_OracleBruteForce)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
