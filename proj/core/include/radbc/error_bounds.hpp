#ifndef RADBC_ERROR_BOUNDS_HPP
#define RADBC_ERROR_BOUNDS_HPP

#include "radbc/quadrature.hpp"

namespace radbc {

// A-priori bound on |exact branch-segment integral - pole sum| for a single
// tangential wavenumber k_abs, at approximation order n and time t. M is a
// sup bound over the segment of the mode amplitude and its first two
// derivatives (see estimate_M). The polynomial in beta_j = |cos(theta_j -
// delta_theta)| is evaluated literally, including the terms that enter with
// negative sign; the sum stays positive and the dominance tests are the
// arbiter of usefulness.
double per_mode_bound(int n, double t, double k_abs, double M);

// Same bound integrated over the tangential frequency disc of radius k_max:
//   (k_max/3) * pi^4/(n+1)^3 * M * (2 n t^2 + 9 n t + n k_max + 8 n + 3).
// Decays like n^-2 at fixed t and k_max, and is quadratic in t with leading
// coefficient 2 n (k_max/3) pi^4/(n+1)^3 M.
double integrated_bound(int n, double t, double k_max, double M);

// Scalar M for per_mode_bound / integrated_bound: the sup over s = i k cos(th)
// (uniform th grid over [0, pi] with endpoints, `samples` >= 64 points) of
// max(|U|, |dU/ds|, |d2U/ds2|) where U(s) = k g(s/k). Uses the registered
// closed-form derivatives of g.
double estimate_M(const AnalyticMode& g, double k_abs, int samples);

struct BoundCheck {
  bool holds = false;
  double ratio = 0.0;  // abs_error / bound; 0 when both vanish
};

// Compares the measured error in a QuadratureReport against a bound value.
// Throws DegenerateBound if the bound is zero while the error is not.
BoundCheck bound_check(const QuadratureReport& report, double bound);

}  // namespace radbc

#endif  // RADBC_ERROR_BOUNDS_HPP
