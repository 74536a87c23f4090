#include "radbc/error_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace radbc {

double per_mode_bound(int n, double t, double k_abs, double M) {
  if (n < 1) throw std::invalid_argument("per_mode_bound: n must be >= 1");
  if (!(t >= 0.0) || !(k_abs >= 0.0) || !(M >= 0.0))
    throw std::invalid_argument("per_mode_bound: t, k_abs, M must be >= 0");
  const double dth = std::numbers::pi / (2.0 * (n + 1));
  double sum = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double theta = j * std::numbers::pi / (n + 1);
    const double b = std::abs(std::cos(theta - dth));
    const double b2 = b * b, b3 = b2 * b, b4 = b2 * b2;
    sum += k_abs * b4 - 2.0 * k_abs * b2 + k_abs + 2.0 * t * b4 - 4.0 * t * b2 + 2.0 * t +
           t * t * b - 2.0 * t * t * b2 + t * t - 5.0 * b3 + 5.0 * b - 5.0 * b3 * t +
           5.0 * t * b - 4.0 * b2 + 2.0;
  }
  return (2.0 / 3.0) * dth * dth * dth * M * (6.0 + sum);
}

double integrated_bound(int n, double t, double k_max, double M) {
  if (n < 1) throw std::invalid_argument("integrated_bound: n must be >= 1");
  if (!(t >= 0.0) || !(M >= 0.0)) throw std::invalid_argument("integrated_bound: t, M must be >= 0");
  if (!(k_max > 0.0)) throw std::invalid_argument("integrated_bound: k_max must be > 0");
  const double np1 = n + 1.0;
  const double pi4 = std::numbers::pi * std::numbers::pi * std::numbers::pi * std::numbers::pi;
  return (k_max / 3.0) * (pi4 / (np1 * np1 * np1)) * M *
         (2.0 * n * t * t + 9.0 * n * t + n * k_max + 8.0 * n + 3.0);
}

double estimate_M(const AnalyticMode& g, double k_abs, int samples) {
  if (samples < 64) throw std::invalid_argument("estimate_M: samples must be >= 64");
  if (!(k_abs > 0.0)) throw std::invalid_argument("estimate_M: k_abs must be > 0");
  double m = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double theta = std::numbers::pi * i / (samples - 1);
    const Complex z(0.0, std::cos(theta));  // z = s / k_abs on the segment
    m = std::max(m, k_abs * std::abs(g.eval(z)));
    m = std::max(m, std::abs(g.eval_d1(z)));
    m = std::max(m, std::abs(g.eval_d2(z)) / k_abs);
  }
  return m;
}

BoundCheck bound_check(const QuadratureReport& report, double bound) {
  if (!(bound >= 0.0)) throw std::invalid_argument("bound_check: bound must be >= 0");
  if (bound == 0.0 && report.abs_error > 0.0)
    throw DegenerateBound("bound_check: zero bound against nonzero measured error");
  BoundCheck c;
  c.holds = report.abs_error <= bound;
  c.ratio = bound > 0.0 ? report.abs_error / bound : 0.0;
  return c;
}

}  // namespace radbc
