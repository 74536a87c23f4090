#include "radbc/wave_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "radbc/rational_dtn.hpp"

namespace radbc {

namespace {

constexpr double kInstabilityLimit = 1e10;

bool finite(double x) { return std::isfinite(x); }

void check_stable(const std::vector<double>& u, long level) {
  for (double v : u)
    if (!finite(v) || std::abs(v) > kInstabilityLimit)
      throw InstabilityDetected("field magnitude exceeded limit at time level " +
                                std::to_string(level));
}

// New level at interior points; both ends left at zero.
void leapfrog_level(const std::vector<double>& um, const std::vector<double>& uc,
                    std::vector<double>& un, double r2, double k2dt2) {
  const std::size_t n = uc.size();
  un.assign(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i)
    un[i] = 2.0 * uc[i] - um[i] + r2 * (uc[i + 1] - 2.0 * uc[i] + uc[i - 1]) - k2dt2 * uc[i];
}

// Levels 0 and 1 of the pulse on a grid whose point i sits at
// x = (i - origin_index) * dx.
void init_levels(const ModeSimConfig& c, long n_pts, long origin_index, double dt,
                 std::vector<double>& u0, std::vector<double>& u1) {
  u0.resize(n_pts);
  u1.assign(n_pts, 0.0);
  for (long i = 0; i < n_pts; ++i) {
    const double x = (i - origin_index) * c.dx;
    const double a = (x - c.pulse_center) / c.pulse_width;
    u0[i] = std::exp(-a * a);
  }
  for (long i = 1; i + 1 < n_pts; ++i) {
    const double ux = (u0[i + 1] - u0[i - 1]) / (2.0 * c.dx);
    const double uxx = (u0[i + 1] - 2.0 * u0[i] + u0[i - 1]) / (c.dx * c.dx);
    u1[i] = u0[i] + dt * ux + 0.5 * dt * dt * (uxx - c.k * c.k * u0[i]);
  }
}

long history_row_len(const ModeSimConfig& c) {
  return std::min<long>(c.n_bc + 1, c.grid_points());
}

void push_history(FieldState& state, const ModeSimConfig& c) {
  if (c.n_bc < 1) return;
  const long len = history_row_len(c);
  state.boundary_history.emplace_back(state.u_curr.begin(), state.u_curr.begin() + len);
  while (static_cast<long>(state.boundary_history.size()) > c.n_bc + 1)
    state.boundary_history.pop_front();
}

// Solves the order-p stencil for the newest boundary value. Assumes
// state.u_curr already holds the new level with interior values filled and
// history rows for the p preceding levels.
void solve_boundary_value(FieldState& state, const BoundaryStencil& s) {
  const int p = s.order;
  double acc = 0.0;
  for (int q = 1; q <= p; ++q) acc += s.coeff_at(0, q) * state.u_curr[q];
  for (int row = 1; row <= p; ++row) {
    const auto& lvl = state.boundary_history[state.boundary_history.size() - row];
    for (int q = 0; q <= p; ++q) acc += s.coeff_at(row, q) * lvl[q];
  }
  state.u_curr[0] = -acc / s.coeff_at(0, 0);
}

void validate_or_throw(const ModeSimConfig& c) {
  const auto violations = c.validate();
  if (violations.empty()) return;
  if (violations.size() == 1 && violations[0].find("pulse_width must be at least") == 0)
    throw ResolutionError(violations[0]);
  throw ConfigError(violations);
}

}  // namespace

std::vector<std::string> ModeSimConfig::validate() const {
  std::vector<std::string> v;
  const double fields[] = {k, x_max, dx, cfl, t_final, pulse_center, pulse_width, reference_factor};
  for (double f : fields)
    if (!finite(f)) {
      v.push_back("all numeric fields must be finite");
      break;
    }
  if (!(k >= 0.0)) v.push_back("k must be >= 0");
  if (n_bc < 0 || n_bc > 8) v.push_back("n_bc must lie in [0, 8]");
  if (!(x_max > 0.0)) v.push_back("x_max must be positive");
  if (!(dx > 0.0)) v.push_back("dx must be positive");
  if (!(cfl > 0.0 && cfl < 1.0)) v.push_back("cfl must lie in (0, 1)");
  if (!(t_final > 0.0)) v.push_back("t_final must be positive");
  if (x_max > 0.0 && dx > 0.0 && grid_points() < n_bc + 1)
    v.push_back("grid must contain at least n_bc+1 points");
  if (!(pulse_center - 3.0 * pulse_width > 0.0))
    v.push_back("pulse_center - 3*pulse_width must be positive (data must vanish at the boundary)");
  if (!(pulse_center > 0.0 && pulse_center < x_max))
    v.push_back("pulse_center must lie inside (0, x_max)");
  if (!(pulse_width >= 2.0 * dx))
    v.push_back("pulse_width must be at least 2*dx (pulse unresolved by the grid)");
  if (!(reference_factor >= 3.0)) v.push_back("reference_factor must be >= 3");
  if (!(t_final < 2.0 * (reference_factor - 1.0) * x_max))
    v.push_back(
        "t_final must be below 2*(reference_factor-1)*x_max (far-wall reflections would re-enter)");
  return v;
}

double ModeSimConfig::effective_dt() const {
  const double nominal = cfl * dx;
  const double stability = dx / std::sqrt(1.0 + 0.25 * k * dx * k * dx);
  return std::min(nominal, stability);
}

long ModeSimConfig::grid_points() const { return std::llround(x_max / dx) + 1; }

long ModeSimConfig::reference_points() const {
  return grid_points() + std::llround((reference_factor - 1.0) * x_max / dx);
}

std::vector<double> boundary_speeds(int n_bc) {
  if (n_bc < 1) throw std::invalid_argument("boundary_speeds: order must be >= 1");
  const RationalDtn abc = poles_and_residues(n_bc);
  std::vector<double> speeds(n_bc);
  for (int j = 0; j < n_bc; ++j) speeds[j] = std::abs(abc.poles[j].imag());
  return speeds;
}

BoundaryStencil compose_boundary_stencil(std::span<const double> speeds, double dt, double dx) {
  if (speeds.empty()) throw std::invalid_argument("compose_boundary_stencil: no factors");
  if (!(dt > 0.0 && dx > 0.0))
    throw std::invalid_argument("compose_boundary_stencil: dt and dx must be positive");
  std::vector<double> s{1.0};
  int size = 1;  // current stencil is size x size
  for (double c : speeds) {
    const double f[2][2] = {{c / (2.0 * dt) + 1.0 / (2.0 * dx), c / (2.0 * dt) - 1.0 / (2.0 * dx)},
                            {-c / (2.0 * dt) + 1.0 / (2.0 * dx), -c / (2.0 * dt) - 1.0 / (2.0 * dx)}};
    std::vector<double> out((size + 1) * (size + 1), 0.0);
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q)
        for (int i = 0; i < size; ++i)
          for (int j = 0; j < size; ++j)
            out[(p + i) * (size + 1) + (q + j)] += f[p][q] * s[i * size + j];
    s = std::move(out);
    ++size;
  }
  BoundaryStencil st;
  st.order = static_cast<int>(speeds.size());
  st.coeff = std::move(s);
  if (std::abs(st.coeff_at(0, 0)) < 1e-12)
    throw SingularStencil("compose_boundary_stencil: corner coefficient below 1e-12");
  return st;
}

FieldState gaussian_pulse_init(const ModeSimConfig& config) {
  validate_or_throw(config);
  FieldState state;
  init_levels(config, config.grid_points(), 0, config.effective_dt(), state.u_prev, state.u_curr);
  state.time_index = 1;
  if (config.n_bc >= 1) {
    const long len = history_row_len(config);
    state.boundary_history.emplace_back(state.u_prev.begin(), state.u_prev.begin() + len);
    state.boundary_history.emplace_back(state.u_curr.begin(), state.u_curr.begin() + len);
  }
  return state;
}

void step_interior(FieldState& state, const ModeSimConfig& config) {
  const long n_pts = config.grid_points();
  if (static_cast<long>(state.u_curr.size()) != n_pts ||
      static_cast<long>(state.u_prev.size()) != n_pts)
    throw std::invalid_argument("step_interior: state size does not match config grid");
  const double dt = config.effective_dt();
  const double r2 = (dt / config.dx) * (dt / config.dx);
  const double k2dt2 = config.k * config.k * dt * dt;
  std::vector<double> next;
  leapfrog_level(state.u_prev, state.u_curr, next, r2, k2dt2);
  check_stable(next, state.time_index + 1);
  state.u_prev = std::move(state.u_curr);
  state.u_curr = std::move(next);
  ++state.time_index;
}

void apply_boundary(FieldState& state, const ModeSimConfig& config) {
  if (config.n_bc < 1) throw std::invalid_argument("apply_boundary: requires n_bc >= 1");
  if (config.n_bc + 1 > config.grid_points())
    throw OrderTooHigh("apply_boundary: n_bc+1 exceeds available grid points");
  const int p_eff =
      static_cast<int>(std::min<std::size_t>(config.n_bc, state.boundary_history.size()));
  if (p_eff >= 1) {
    const auto speeds = boundary_speeds(p_eff);
    const BoundaryStencil s = compose_boundary_stencil(speeds, config.effective_dt(), config.dx);
    solve_boundary_value(state, s);
  }
  push_history(state, config);
}

ReflectionReport run_simulation(const ModeSimConfig& config) {
  validate_or_throw(config);
  const long n_pts = config.grid_points();
  if (config.n_bc + 1 > n_pts)
    throw OrderTooHigh("run_simulation: n_bc+1 exceeds available grid points");

  const double dt = config.effective_dt();
  const long steps = static_cast<long>(std::ceil(config.t_final / dt - 1e-12));
  const long n_ext = config.reference_points() - n_pts;  // cells added to the left

  FieldState trunc = gaussian_pulse_init(config);
  std::vector<double> ref_prev, ref_curr;
  init_levels(config, config.reference_points(), n_ext, dt, ref_prev, ref_curr);

  // Build the warm-up ladder of boundary stencils once per run.
  std::vector<BoundaryStencil> stencils;
  for (int p = 1; p <= config.n_bc; ++p)
    stencils.push_back(compose_boundary_stencil(boundary_speeds(p), dt, config.dx));

  const double r2 = (dt / config.dx) * (dt / config.dx);
  const double k2dt2 = config.k * config.k * dt * dt;

  ReflectionReport report;
  report.config = config;
  report.dt = dt;
  report.steps = steps;
  report.grid_points = n_pts;
  report.reference_points = config.reference_points();
  report.times.reserve(steps + 1);
  report.errors.reserve(steps + 1);

  const auto record = [&](long level) {
    double err = 0.0;
    for (long i = 0; i < n_pts; ++i)
      err = std::max(err, std::abs(trunc.u_curr[i] - ref_curr[n_ext + i]));
    report.times.push_back(level * dt);
    report.errors.push_back(err);
  };
  record(1);

  std::vector<double> next;
  for (long m = 1; m <= steps; ++m) {
    step_interior(trunc, config);
    if (config.n_bc >= 1) {
      const int p_eff =
          static_cast<int>(std::min<std::size_t>(config.n_bc, trunc.boundary_history.size()));
      solve_boundary_value(trunc, stencils[p_eff - 1]);
      push_history(trunc, config);
    }
    leapfrog_level(ref_prev, ref_curr, next, r2, k2dt2);
    check_stable(next, m + 1);
    ref_prev = std::move(ref_curr);
    ref_curr = std::move(next);
    record(m + 1);
  }
  report.peak_error = *std::max_element(report.errors.begin(), report.errors.end());
  return report;
}

std::vector<SweepRow> sweep(const std::vector<ModeSimConfig>& configs) {
  std::vector<SweepRow> rows;
  rows.reserve(configs.size());
  for (const auto& c : configs) {
    SweepRow row{c.k, c.n_bc, c.dx, c.t_final, std::numeric_limits<double>::quiet_NaN(), "ok"};
    try {
      row.peak_error = run_simulation(c).peak_error;
    } catch (const Error& e) {
      row.status = e.kind();
    } catch (const std::exception&) {
      row.status = "InvalidArgument";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double leapfrog_energy(std::span<const double> u_prev, std::span<const double> u_curr, double dx,
                       double dt, double k) {
  if (u_prev.size() != u_curr.size())
    throw std::invalid_argument("leapfrog_energy: level size mismatch");
  double kinetic = 0.0, potential = 0.0;
  for (std::size_t i = 0; i < u_curr.size(); ++i) {
    const double vt = (u_curr[i] - u_prev[i]) / dt;
    kinetic += vt * vt + k * k * u_curr[i] * u_prev[i];
  }
  for (std::size_t i = 0; i + 1 < u_curr.size(); ++i)
    potential += (u_curr[i + 1] - u_curr[i]) * (u_prev[i + 1] - u_prev[i]) / (dx * dx);
  return 0.5 * dx * (kinetic + potential);
}

}  // namespace radbc
