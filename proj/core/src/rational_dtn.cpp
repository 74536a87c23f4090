#include "radbc/rational_dtn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace radbc {

namespace {

void require_finite(Complex z, const char* where) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument(std::string(where) + ": non-finite argument");
}

}  // namespace

double chebyshev_u_eval(int n, double x) {
  if (n < 0 || n > 10'000)
    throw std::invalid_argument("chebyshev_u_eval: degree must be in [0, 10^4]");
  if (n == 0) return 1.0;
  double um = 1.0;        // U_0
  double uc = 2.0 * x;    // U_1
  for (int m = 1; m < n; ++m) {
    const double un = 2.0 * x * uc - um;
    um = uc;
    uc = un;
  }
  return uc;
}

Complex continued_fraction_tail(int n, Complex z) {
  if (n < 1) throw std::invalid_argument("continued_fraction_tail: order must be >= 1");
  require_finite(z, "continued_fraction_tail");
  Complex w = 0.0;
  for (int i = 0; i < n; ++i) {
    const Complex den = 2.0 * z + w;
    if (std::abs(den) < 1e-30)
      throw DivisionNearZero("continued_fraction_tail: denominator vanished at depth " +
                             std::to_string(i + 1));
    w = 1.0 / den;
  }
  return w;
}

RationalDtn poles_and_residues(int n) {
  if (n < 1) throw std::invalid_argument("poles_and_residues: order must be >= 1");
  RationalDtn r;
  r.order = n;
  r.thetas.resize(n);
  r.poles.resize(n);
  r.residues.resize(n);
  for (int j = 1; j <= n; ++j)
    r.thetas[j - 1] = j * std::numbers::pi / (n + 1);
  // Fill the first half, then mirror so that conjugate symmetry is exact in
  // floating point and the middle pole of an odd order is exactly zero.
  const int half = n / 2;
  for (int j = 1; j <= half; ++j) {
    const double c = std::cos(r.thetas[j - 1]);
    const double s = std::sin(r.thetas[j - 1]);
    r.poles[j - 1] = Complex(0.0, c);
    r.poles[n - j] = Complex(0.0, -c);
    r.residues[j - 1] = s * s / (n + 1);
    r.residues[n - j] = r.residues[j - 1];
  }
  if (n % 2 == 1) {
    r.poles[half] = Complex(0.0, 0.0);
    r.residues[half] = 1.0 / (n + 1);  // sin^2(pi/2) = 1
  }
  return r;
}

Complex partial_fraction_eval(const RationalDtn& abc, Complex z) {
  require_finite(z, "partial_fraction_eval");
  Complex acc = 0.0;
  for (int j = 0; j < abc.order; ++j) {
    const Complex d = z - abc.poles[j];
    if (std::abs(d) < 1e-8)
      throw PoleProximity("partial_fraction_eval: z within 1e-8 of pole " +
                          std::to_string(j + 1));
    acc += abc.residues[j] / d;
  }
  return acc;
}

Complex sqrt_dtn_approx(const RationalDtn& abc, Complex z) {
  return z + partial_fraction_eval(abc, z);
}

Complex sqrt_one_plus_z2(Complex z) {
  require_finite(z, "sqrt_one_plus_z2");
  if (z.real() >= 0.0) return std::sqrt(1.0 + z * z);
  const Complex zc = std::conj(z);
  return -std::conj(std::sqrt(1.0 + zc * zc));
}

Complex branch_jump(double y, double delta, double k_abs) {
  if (!(y > -1.0 && y < 1.0)) throw std::invalid_argument("branch_jump: y must lie in (-1, 1)");
  if (!(delta > 0.0 && delta <= 0.1))
    throw std::invalid_argument("branch_jump: delta must lie in (0, 0.1]");
  if (!(k_abs > 0.0)) throw std::invalid_argument("branch_jump: k_abs must be positive");
  const auto h = [](Complex z) { return 1.0 / (z + sqrt_one_plus_z2(z)); };
  return k_abs * (h(Complex(delta, y)) - h(Complex(-delta, y)));
}

}  // namespace radbc
