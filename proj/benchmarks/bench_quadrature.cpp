#include <benchmark/benchmark.h>

#include "radbc/error_bounds.hpp"
#include "radbc/quadrature.hpp"
#include "radbc/rational_dtn.hpp"

using namespace radbc;

static void BM_ContinuedFractionTail(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Complex z(1.3, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(continued_fraction_tail(n, z));
}
BENCHMARK(BM_ContinuedFractionTail)->Range(4, 256);

static void BM_PartialFractionEval(benchmark::State& state) {
  const auto abc = poles_and_residues(static_cast<int>(state.range(0)));
  const Complex z(1.3, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(partial_fraction_eval(abc, z));
}
BENCHMARK(BM_PartialFractionEval)->Range(4, 256);

static void BM_PoleSum(benchmark::State& state) {
  const auto abc = poles_and_residues(static_cast<int>(state.range(0)));
  const AnalyticMode g = analytic_mode("runge2");
  for (auto _ : state) benchmark::DoNotOptimize(pole_sum(abc, g, 10.0, 1.0));
}
BENCHMARK(BM_PoleSum)->Range(4, 256);

static void BM_ExactBranchcutIntegral(benchmark::State& state) {
  const AnalyticMode g = analytic_mode("runge2");
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_branchcut_integral(g, t, 1.0, 1e-12));
}
BENCHMARK(BM_ExactBranchcutIntegral)->Arg(0)->Arg(10)->Arg(100);

static void BM_GaussLegendreFoldedRule(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_legendre_folded_rule(m));
}
BENCHMARK(BM_GaussLegendreFoldedRule)->Range(8, 256);

static void BM_PerModeBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(per_mode_bound(n, 10.0, 1.0, 1.0));
}
BENCHMARK(BM_PerModeBound)->Range(4, 1024);

static void BM_EstimateM(benchmark::State& state) {
  const AnalyticMode g = analytic_mode("gauss");
  for (auto _ : state) benchmark::DoNotOptimize(estimate_M(g, 1.0, 4096));
}
BENCHMARK(BM_EstimateM);
