#ifndef RADBC_RATIONAL_DTN_HPP
#define RADBC_RATIONAL_DTN_HPP

#include <complex>
#include <numbers>
#include <vector>

#include "radbc/errors.hpp"

namespace radbc {

using Complex = std::complex<double>;

// Rational approximation of order n to the one-way symbol sqrt(1+z^2):
//
//   sqrt(1+z^2) ~ z + sum_j alpha_j / (z - z_j)
//
// with simple poles z_j = i cos(theta_j) on the imaginary axis inside the
// unit disc and positive residues alpha_j = sin^2(theta_j)/(n+1),
// theta_j = j*pi/(n+1). The poles sample the branch segment [-i, i] of the
// exact symbol; the residues sum to 1/2, matching the 1/(2z) tail at
// infinity.
struct RationalDtn {
  int order = 0;                 // n >= 1
  std::vector<double> thetas;    // theta_j, increasing in j
  std::vector<Complex> poles;    // z_j = i cos(theta_j); conjugate-symmetric
  std::vector<double> residues;  // alpha_j > 0

  // Half angular spacing pi/(2(n+1)); the poles are the midpoints of a
  // uniform partition of [0, pi] with this margin at each cell edge.
  double delta_theta() const { return std::numbers::pi / (2.0 * (order + 1)); }
};

// Chebyshev polynomial of the second kind, U_n(x), by forward three-term
// recurrence. Valid for any real x (including |x| > 1, which the pole
// root-finding tests rely on). n must lie in [0, 10^4].
double chebyshev_u_eval(int n, double x);

// Depth-n truncation of the continued fraction 1/(2z + 1/(2z + ...)),
// evaluated innermost-first. Throws DivisionNearZero if an intermediate
// denominator falls below 1e-30 in magnitude (z at a pole of the
// truncation).
Complex continued_fraction_tail(int n, Complex z);

// Closed-form poles and residues of continued_fraction_tail(n, .).
// Conjugate symmetry is exact: the second half of the pole list is built by
// mirroring the first half, and the middle pole of an odd-order
// approximation is exactly zero.
RationalDtn poles_and_residues(int n);

// sum_j alpha_j / (z - z_j). Throws PoleProximity when z is within 1e-8 of
// a pole.
Complex partial_fraction_eval(const RationalDtn& abc, Complex z);

// z + partial_fraction_eval(abc, z); converges to sqrt(1+z^2) away from
// [-i, i] as the order grows.
Complex sqrt_dtn_approx(const RationalDtn& abc, Complex z);

// sqrt(1+z^2) on the branch that is analytic off [-i, i] and behaves like z
// at infinity: the principal square root for Re z >= 0, continued to the
// left half plane by odd reflection, -conj(sqrt(1 + conj(z)^2)).
Complex sqrt_one_plus_z2(Complex z);

// Jump of k/(z + sqrt(1+z^2)) across the branch segment, sampled at
// z = +-delta + iy. Tends to 2*k*sqrt(1-y^2) as delta -> 0, at first order
// in delta. Requires y in (-1, 1) and 0 < delta <= 0.1.
Complex branch_jump(double y, double delta, double k_abs);

}  // namespace radbc

#endif  // RADBC_RATIONAL_DTN_HPP
