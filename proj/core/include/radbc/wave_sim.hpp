#ifndef RADBC_WAVE_SIM_HPP
#define RADBC_WAVE_SIM_HPP

#include <deque>
#include <span>
#include <string>
#include <vector>

#include "radbc/errors.hpp"

namespace radbc {

// Half-line mode problem u_tt = u_xx - k^2 u on [0, x_max], radiating
// boundary of product order n_bc at x = 0, Dirichlet wall at x_max. The
// reference solution lives on a domain enlarged to the left by
// (reference_factor - 1) * x_max, so that everything crossing x = 0 keeps
// travelling and the restriction to [0, x_max] is reflection-free until the
// far wall could answer back.
struct ModeSimConfig {
  double k = 0.0;               // tangential wavenumber
  int n_bc = 0;                 // boundary order; 0 = hard Dirichlet control
  double x_max = 10.0;
  double dx = 0.01;
  double cfl = 0.9;             // dt = cfl * dx, shrunk if the k-bound binds
  double t_final = 8.0;         // pulse arrival plus the return transit
  double pulse_center = 5.0;
  double pulse_width = 0.5;
  double reference_factor = 3.0;

  // Every violated invariant, in a fixed order; empty when valid.
  std::vector<std::string> validate() const;

  // min(cfl*dx, dx/sqrt(1 + (k dx)^2/4)): the leapfrog stability limit for
  // the mode equation caps the nominal step.
  double effective_dt() const;

  long grid_points() const;       // points on [0, x_max]
  long reference_points() const;  // points on the enlarged domain
};

struct FieldState {
  std::vector<double> u_prev;  // level m-1
  std::vector<double> u_curr;  // level m
  long time_index = 0;         // m
  // Last n_bc+1 time levels at the first n_bc+1 grid points, oldest first.
  std::deque<std::vector<double>> boundary_history;
};

struct ReflectionReport {
  std::vector<double> times;
  std::vector<double> errors;  // max over [0, x_max] of |u_b - u_ref|
  double peak_error = 0.0;
  ModeSimConfig config;
  double dt = 0.0;
  long steps = 0;
  long grid_points = 0;
  long reference_points = 0;
};

struct SweepRow {
  double k = 0.0;
  int n_bc = 0;
  double dx = 0.0;
  double t_final = 0.0;
  double peak_error = 0.0;
  std::string status;  // "ok" or the error kind
};

// Space-time corner stencil of the composed product boundary operator;
// coeff(p, q) multiplies u at grid point q, time level (newest - p).
struct BoundaryStencil {
  int order = 0;
  std::vector<double> coeff;  // (order+1) x (order+1), row-major in p
  double coeff_at(int p, int q) const { return coeff[p * (order + 1) + q]; }
};

// Factor speeds of the order-n product condition: |cos(j pi/(n+1))|,
// j = 1..n. The magnitudes of the rational-approximation pole cosines; the
// signed values make the composed operator amplify instead of absorb, so
// each factor keeps the magnitude only. Order 1 degenerates to a Neumann
// condition (speed 0).
std::vector<double> boundary_speeds(int n_bc);

// Composes first-order box-scheme factors (c D_t^- - D_x^+), each one-sided
// difference averaged over the adjacent space/time level, into the corner
// stencil. Throws SingularStencil if the new-corner coefficient is below
// 1e-12 in magnitude.
BoundaryStencil compose_boundary_stencil(std::span<const double> speeds, double dt, double dx);

// Level 0: u(x, 0) = exp(-((x - pulse_center)/pulse_width)^2). Level 1:
// Taylor half-step with u_t(x, 0) = u_x(x, 0) (the k = 0 pulse moves toward
// the boundary) including the k^2 term. Validates the configuration.
FieldState gaussian_pulse_init(const ModeSimConfig& config);

// Leapfrog update at interior points; boundary entries of the new level are
// zeroed (Dirichlet placeholder until apply_boundary runs). Throws
// InstabilityDetected if any value exceeds 1e10 or goes non-finite.
void step_interior(FieldState& state, const ModeSimConfig& config);

// Solves the composed product condition for the newest boundary value and
// appends the new level to the history ring. During warm-up the order is
// limited by the available history depth. Requires n_bc >= 1.
void apply_boundary(FieldState& state, const ModeSimConfig& config);

// Full truncated-vs-reference run; returns the reflection time series.
ReflectionReport run_simulation(const ModeSimConfig& config);

// Independent run_simulation per config; a failing row records its error
// kind instead of aborting the sweep.
std::vector<SweepRow> sweep(const std::vector<ModeSimConfig>& configs);

// Conserved leapfrog energy for u_tt = u_xx - k^2 u with Dirichlet walls,
// evaluated on a consecutive level pair. Constant up to rounding along an
// interior-only evolution.
double leapfrog_energy(std::span<const double> u_prev, std::span<const double> u_curr, double dx,
                       double dt, double k);

}  // namespace radbc

#endif  // RADBC_WAVE_SIM_HPP
