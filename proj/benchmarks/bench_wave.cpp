#include <benchmark/benchmark.h>

#include "radbc/wave_sim.hpp"

using namespace radbc;

namespace {

ModeSimConfig bench_config(int n_bc, double dx) {
  ModeSimConfig c;
  c.k = 0.5;
  c.n_bc = n_bc;
  c.x_max = 10.0;
  c.dx = dx;
  c.cfl = 0.9;
  c.t_final = 8.0;
  c.pulse_center = 5.0;
  c.pulse_width = 0.5;
  c.reference_factor = 3.0;
  return c;
}

}  // namespace

static void BM_StepInterior(benchmark::State& state) {
  const ModeSimConfig c = bench_config(0, 10.0 / static_cast<double>(state.range(0)));
  FieldState s = gaussian_pulse_init(c);
  for (auto _ : state) step_interior(s, c);
  state.SetItemsProcessed(state.iterations() * c.grid_points());
}
BENCHMARK(BM_StepInterior)->Arg(1000)->Arg(4000)->Arg(16000);

static void BM_ApplyBoundary(benchmark::State& state) {
  const ModeSimConfig c = bench_config(static_cast<int>(state.range(0)), 0.01);
  FieldState s = gaussian_pulse_init(c);
  for (auto _ : state) {
    step_interior(s, c);
    apply_boundary(s, c);
  }
}
BENCHMARK(BM_ApplyBoundary)->DenseRange(1, 8, 1);

static void BM_ComposeBoundaryStencil(benchmark::State& state) {
  const auto speeds = boundary_speeds(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compose_boundary_stencil(speeds, 0.009, 0.01));
}
BENCHMARK(BM_ComposeBoundaryStencil)->DenseRange(1, 8, 1);

static void BM_RunSimulation(benchmark::State& state) {
  const ModeSimConfig c = bench_config(4, 0.02);
  for (auto _ : state) benchmark::DoNotOptimize(run_simulation(c));
}
BENCHMARK(BM_RunSimulation);
