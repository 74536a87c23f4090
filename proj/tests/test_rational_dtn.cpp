#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "radbc/rational_dtn.hpp"

using namespace radbc;
using std::numbers::pi;

namespace {

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

// Roots of U_n on (-1, 1), found by sign-change scan plus bisection. Serves
// as an independent oracle for the pole locations.
std::vector<double> chebyshev_u_roots(int n) {
  std::vector<double> roots;
  const int grid = 50 * (n + 1);
  double prev_x = -1.0 + 1e-9;
  double prev_v = chebyshev_u_eval(n, prev_x);
  for (int i = 1; i <= grid; ++i) {
    const double x = -1.0 + 2.0 * i / grid - 1e-9;
    const double v = chebyshev_u_eval(n, x);
    if (prev_v == 0.0) roots.push_back(prev_x);
    if (prev_v * v < 0.0) {
      double lo = prev_x, hi = x, flo = prev_v;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = chebyshev_u_eval(n, mid);
        if (flo * fm <= 0.0)
          hi = mid;
        else {
          lo = mid;
          flo = fm;
        }
        if (hi - lo < 1e-13) break;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_v = v;
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace

TEST_CASE("chebyshev_u_eval matches closed-form values") {
  CHECK(chebyshev_u_eval(2, 0.5) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(chebyshev_u_eval(0, 0.3) == doctest::Approx(1.0));
  CHECK(chebyshev_u_eval(3, 1.0) == doctest::Approx(4.0));
  for (int n : {1, 5, 17}) CHECK(chebyshev_u_eval(n, 1.0) == doctest::Approx(n + 1.0));
}

TEST_CASE("chebyshev_u_eval agrees with the trigonometric form on (-1,1)") {
  for (int n : {1, 2, 7, 20}) {
    for (double phi = 0.1; phi < 3.1; phi += 0.173) {
      const double expect = std::sin((n + 1) * phi) / std::sin(phi);
      CHECK(chebyshev_u_eval(n, std::cos(phi)) == doctest::Approx(expect).epsilon(1e-11));
    }
  }
}

TEST_CASE("chebyshev_u_eval rejects out-of-range degrees") {
  CHECK_THROWS_AS(chebyshev_u_eval(-1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(chebyshev_u_eval(10'001, 0.0), std::invalid_argument);
}

TEST_CASE("continued_fraction_tail shallow truncations") {
  CHECK(close(continued_fraction_tail(1, 1.0), 0.5, 1e-15));
  CHECK(close(continued_fraction_tail(2, 1.0), 0.4, 1e-15));
  // Deep truncation reaches the fixed point sqrt(1+z^2) - z.
  CHECK(close(continued_fraction_tail(40, 1.0), std::sqrt(2.0) - 1.0, 1e-12));
}

TEST_CASE("continued_fraction_tail detects evaluation at a truncation pole") {
  // i/2 is a pole of the depth-2 truncation.
  CHECK_THROWS_AS(continued_fraction_tail(2, Complex(0.0, 0.5)), DivisionNearZero);
  CHECK_THROWS_AS(continued_fraction_tail(3, Complex(0.0, 0.0)), DivisionNearZero);
}

TEST_CASE("poles_and_residues closed forms for small orders") {
  const auto r1 = poles_and_residues(1);
  REQUIRE(r1.poles.size() == 1);
  CHECK(r1.poles[0] == Complex(0.0, 0.0));
  CHECK(r1.residues[0] == doctest::Approx(0.5));

  const auto r2 = poles_and_residues(2);
  CHECK(close(r2.poles[0], Complex(0.0, 0.5), 1e-15));
  CHECK(close(r2.poles[1], Complex(0.0, -0.5), 1e-15));
  CHECK(r2.residues[0] == doctest::Approx(0.25));
  CHECK(r2.residues[1] == doctest::Approx(0.25));

  const auto r3 = poles_and_residues(3);
  CHECK(close(r3.poles[0], Complex(0.0, std::sqrt(2.0) / 2.0), 1e-15));
  CHECK(r3.poles[1] == Complex(0.0, 0.0));
  CHECK(close(r3.poles[2], Complex(0.0, -std::sqrt(2.0) / 2.0), 1e-15));
  CHECK(r3.residues[0] == doctest::Approx(0.125));
  CHECK(r3.residues[1] == doctest::Approx(0.25));
  CHECK(r3.residues[2] == doctest::Approx(0.125));
}

TEST_CASE("pole lists are conjugate-symmetric with positive residues summing to 1/2") {
  for (int n : {1, 2, 3, 10, 33, 100, 200}) {
    const auto r = poles_and_residues(n);
    REQUIRE(static_cast<int>(r.poles.size()) == n);
    double sum = 0.0;
    int zero_poles = 0;
    for (int j = 0; j < n; ++j) {
      CHECK(r.poles[j].real() == 0.0);
      CHECK(std::abs(r.poles[j]) < 1.0);
      CHECK(r.residues[j] > 0.0);
      // Mirror pole is the exact conjugate.
      CHECK(r.poles[j] == std::conj(r.poles[n - 1 - j]));
      CHECK(r.residues[j] == r.residues[n - 1 - j]);
      if (r.poles[j] == Complex(0.0, 0.0)) ++zero_poles;
      sum += r.residues[j];
    }
    CHECK(zero_poles == n % 2);
    CHECK(std::abs(sum - 0.5) <= 1e-14);
    CHECK(r.delta_theta() == doctest::Approx(pi / (2.0 * (n + 1))));
  }
}

TEST_CASE("partial_fraction_eval matches small closed forms and guards poles") {
  const auto r1 = poles_and_residues(1);
  CHECK(close(partial_fraction_eval(r1, 1.0), 0.5, 1e-15));
  const auto r2 = poles_and_residues(2);
  CHECK(close(partial_fraction_eval(r2, 1.0), 0.4, 1e-15));
  // 2z/(4z^2+1) at a generic complex point.
  const Complex z(0.7, -1.3);
  CHECK(close(partial_fraction_eval(r2, z), 2.0 * z / (4.0 * z * z + 1.0), 1e-14));
  CHECK_THROWS_AS(partial_fraction_eval(r2, Complex(0.0, 0.5) + Complex(1e-12, 0.0)),
                  PoleProximity);
  CHECK_THROWS_AS(partial_fraction_eval(r2, Complex(std::nan(""), 0.0)), std::invalid_argument);
}

TEST_CASE("sqrt_dtn_approx examples") {
  CHECK(close(sqrt_dtn_approx(poles_and_residues(30), 1.0), std::sqrt(2.0), 1e-12));

  const Complex v = sqrt_dtn_approx(poles_and_residues(2), 10.0);
  CHECK(close(v, 10.0 + 20.0 / 401.0, 1e-14));
  CHECK(std::abs(v - std::sqrt(Complex(101.0))) < 2e-6);

  const Complex w = sqrt_dtn_approx(poles_and_residues(1), Complex(0.0, 2.0));
  CHECK(close(w, Complex(0.0, 1.75), 1e-15));
  CHECK(std::abs(w - Complex(0.0, std::sqrt(3.0))) < 0.02);

  CHECK_THROWS_AS(sqrt_dtn_approx(poles_and_residues(2), Complex(1e-13, 0.5)), PoleProximity);
}

TEST_CASE("continued fraction and partial fraction agree away from the poles") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  for (int n = 1; n <= 30; ++n) {
    const auto abc = poles_and_residues(n);
    int accepted = 0;
    while (accepted < 200) {
      const Complex z(box(rng), box(rng));
      double dist = 1e9;
      for (const auto& p : abc.poles) dist = std::min(dist, std::abs(z - p));
      if (dist <= 0.05) continue;
      ++accepted;
      const Complex tail = continued_fraction_tail(n, z);
      const Complex pf = partial_fraction_eval(abc, z);
      CHECK(std::abs(tail - pf) <= 1e-10 * std::abs(tail));
    }
  }
}

TEST_CASE("poles are the roots of U_n(iz) on the imaginary axis") {
  for (int n = 1; n <= 20; ++n) {
    const auto abc = poles_and_residues(n);
    const auto roots = chebyshev_u_roots(n);  // cos-values, decreasing
    REQUIRE(roots.size() == abc.poles.size());
    for (int j = 0; j < n; ++j) CHECK(std::abs(roots[j] - abc.poles[j].imag()) <= 1e-10);
  }
}

TEST_CASE("residues match the limit (z - z_j) * tail(z)") {
  for (int n : {1, 2, 3, 5, 8, 13}) {
    const auto abc = poles_and_residues(n);
    for (int j = 0; j < n; ++j) {
      const double d1 = 1e-4, d2 = 1e-5;
      const Complex v1 = d1 * continued_fraction_tail(n, abc.poles[j] + d1);
      const Complex v2 = d2 * continued_fraction_tail(n, abc.poles[j] + d2);
      const Complex extrap = (d1 * v2 - d2 * v1) / (d1 - d2);
      CHECK(std::abs(extrap - abc.residues[j]) <= 1e-6);
    }
  }
}

TEST_CASE("sqrt_dtn_approx commutes with conjugation") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  const auto abc = poles_and_residues(9);
  int accepted = 0;
  while (accepted < 50) {
    const Complex z(box(rng), box(rng));
    double dist = 1e9;
    for (const auto& p : abc.poles) dist = std::min(dist, std::abs(z - p));
    if (dist <= 0.05) continue;
    ++accepted;
    const Complex a = sqrt_dtn_approx(abc, std::conj(z));
    const Complex b = std::conj(sqrt_dtn_approx(abc, z));
    CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("sqrt_one_plus_z2 is odd-reflected and asymptotically linear") {
  CHECK(close(sqrt_one_plus_z2(Complex(2.0, 0.0)), std::sqrt(5.0), 1e-15));
  CHECK(close(sqrt_one_plus_z2(Complex(-2.0, 0.0)), -std::sqrt(5.0), 1e-15));
  // Continuity across the imaginary axis above the segment endpoint.
  const Complex up = sqrt_one_plus_z2(Complex(1e-12, 2.0));
  const Complex um = sqrt_one_plus_z2(Complex(-1e-12, 2.0));
  CHECK(std::abs(up - um) < 1e-9);
  CHECK(up.imag() > 0.0);
}

TEST_CASE("branch_jump approaches 2 k sqrt(1-y^2)") {
  CHECK(std::abs(branch_jump(0.0, 1e-6, 1.0) - 2.0) <= 1e-5);
  CHECK(std::abs(branch_jump(0.6, 1e-6, 1.0) - 1.6) <= 1e-5);
  // k scaling is exact.
  const Complex j1 = branch_jump(0.3, 1e-3, 1.0);
  const Complex j3 = branch_jump(0.3, 1e-3, 3.0);
  CHECK(close(j3, 3.0 * j1, 1e-15));
  // Near the segment endpoints the jump fades out.
  for (double y : {0.999, -0.999}) {
    CHECK(std::abs(branch_jump(y, 1e-3, 1.0)) < 0.2);
    CHECK(std::abs(branch_jump(y, 1e-4, 1.0)) < 0.12);
  }
}

TEST_CASE("branch_jump converges at first order in delta") {
  for (double y : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
    const double target = 2.0 * std::sqrt(1.0 - y * y);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double deltas[] = {1e-2, 1e-3, 1e-4};
    for (double d : deltas) {
      const double lx = std::log(d);
      const double ly = std::log(std::abs(branch_jump(y, d, 1.0) - target));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    const int m = 3;
    const double rate = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    CHECK(rate >= 0.8);
    CHECK(rate <= 1.2);
  }
}

TEST_CASE("branch_jump argument guards") {
  CHECK_THROWS_AS(branch_jump(1.0, 1e-3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(branch_jump(0.0, 0.2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(branch_jump(0.0, 1e-3, 0.0), std::invalid_argument);
}
