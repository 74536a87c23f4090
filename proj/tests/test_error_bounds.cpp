#include <doctest.h>

#include <cmath>
#include <numbers>

#include "radbc/error_bounds.hpp"

using namespace radbc;
using std::numbers::pi;

namespace {

// Term-by-term re-evaluation in extended precision with the polynomial
// grouped into factored non-negative pieces plus the residual quadratic:
// a deliberately different summation path from the library.
long double per_mode_bound_regrouped(int n, long double t, long double k, long double M) {
  const long double lpi = std::acos(-1.0L);
  const long double dth = lpi / (2.0L * (n + 1));
  long double sum = 0.0L;
  for (int j = n; j >= 1; --j) {
    const long double b = std::fabs(std::cos(j * lpi / (n + 1) - dth));
    const long double b2 = b * b, b3 = b2 * b;
    const long double one_minus_b2 = 1.0L - b2;
    sum += (k + 2.0L * t) * one_minus_b2 * one_minus_b2;
    sum += t * t * (b - 2.0L * b2 + 1.0L);
    sum += 5.0L * (1.0L + t) * (b - b3);
    sum += 2.0L - 4.0L * b2;
  }
  return (2.0L / 3.0L) * dth * dth * dth * M * (6.0L + sum);
}

double dense_estimate_M(const AnalyticMode& g, double k, int samples) {
  double m = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double theta = pi * i / (samples - 1);
    const Complex z(0.0, std::cos(theta));
    m = std::max(m, k * std::abs(g.eval(z)));
    m = std::max(m, std::abs(g.eval_d1(z)));
    m = std::max(m, std::abs(g.eval_d2(z)) / k);
  }
  return m;
}

}  // namespace

TEST_CASE("per_mode_bound closed form at order 1") {
  // beta_1 = cos(pi/4); the bracket is 6 - 5 b^3 + 5 b - 4 b^2 + 2.
  const double b = std::sqrt(2.0) / 2.0;
  const double expect =
      (2.0 / 3.0) * std::pow(pi / 4.0, 3) * (6.0 - 5.0 * b * b * b + 5.0 * b - 4.0 * b * b + 2.0);
  CHECK(per_mode_bound(1, 0.0, 0.0, 1.0) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(per_mode_bound(1, 0.0, 0.0, 1.0) == doctest::Approx(2.5089).epsilon(1e-4));
}

TEST_CASE("per_mode_bound vanishes with M and matches the regrouped evaluation") {
  CHECK(per_mode_bound(7, 3.0, 2.0, 0.0) == 0.0);
  for (int n : {1, 2, 4, 8, 16, 37}) {
    for (double t : {0.0, 1.0, 10.0}) {
      for (double k : {0.0, 1.0, 3.5}) {
        const double lib = per_mode_bound(n, t, k, 1.0);
        const double oracle = static_cast<double>(per_mode_bound_regrouped(n, t, k, 1.0));
        CHECK(std::abs(lib - oracle) <= 1e-12 * std::max(1.0, oracle));
      }
    }
  }
}

TEST_CASE("integrated_bound closed forms") {
  CHECK(integrated_bound(1, 0.0, 1.0, 1.0) ==
        doctest::Approx(std::pow(pi, 4) / 2.0).epsilon(1e-14));
  CHECK(integrated_bound(1, 1.0, 1.0, 1.0) ==
        doctest::Approx(23.0 * std::pow(pi, 4) / 24.0).epsilon(1e-14));
  CHECK(integrated_bound(5, 2.0, 3.0, 0.0) == 0.0);
}

TEST_CASE("bounds scale linearly in M") {
  for (double m : {0.7, 1.3, 42.0}) {
    CHECK(per_mode_bound(6, 2.0, 1.0, 2.0 * m) == doctest::Approx(2.0 * per_mode_bound(6, 2.0, 1.0, m)));
    CHECK(integrated_bound(6, 2.0, 1.0, 2.0 * m) ==
          doctest::Approx(2.0 * integrated_bound(6, 2.0, 1.0, m)));
  }
}

TEST_CASE("integrated_bound decays like n^-2") {
  for (int n : {64, 128}) {
    const double ratio = integrated_bound(2 * n, 1.0, 1.0, 1.0) / integrated_bound(n, 1.0, 1.0, 1.0);
    CHECK(std::abs(ratio - 0.25) <= 0.05 * 0.25);
  }
}

TEST_CASE("integrated_bound is quadratic in t with the advertised coefficients") {
  const int n = 64;
  const double k = 1.0, M = 1.0;
  const double f0 = integrated_bound(n, 0.0, k, M);
  const double f1 = integrated_bound(n, 1.0, k, M);
  const double f2 = integrated_bound(n, 2.0, k, M);
  const double a = 0.5 * (f2 - 2.0 * f1 + f0);
  const double b = f1 - f0 - a;
  const double np1 = n + 1.0;
  const double base = (k / 3.0) * std::pow(pi, 4) / (np1 * np1 * np1) * M;
  CHECK(std::abs(a - 2.0 * n * base) <= 1e-10);
  CHECK(std::abs(b - 9.0 * n * base) <= 1e-10);
  CHECK(std::abs(f0 - (n * k + 8.0 * n + 3.0) * base) <= 1e-10);
}

TEST_CASE("per_mode_bound stays strictly positive at t = 0, k = 0") {
  for (int n = 1; n <= 500; ++n) CHECK(per_mode_bound(n, 0.0, 0.0, 1.0) > 0.0);
}

TEST_CASE("estimate_M closed forms and dense-grid agreement") {
  CHECK(estimate_M(analytic_mode("const1"), 1.0, 64) == doctest::Approx(1.0));
  CHECK(estimate_M(analytic_mode("z"), 1.0, 128) == doctest::Approx(1.0));
  const double coarse = estimate_M(analytic_mode("runge2"), 1.0, 4096);
  const double dense = dense_estimate_M(analytic_mode("runge2"), 1.0, 100'001);
  CHECK(std::abs(coarse - dense) <= 1e-4 * dense);
  CHECK_THROWS_AS(estimate_M(analytic_mode("z"), 1.0, 16), std::invalid_argument);
}

TEST_CASE("bound_check outcomes") {
  const auto exactness =
      quadrature_report(poles_and_residues(2), analytic_mode("const1"), 0.0, 1.0, 1e-12);
  const double m1 = estimate_M(analytic_mode("const1"), 1.0, 4096);
  const auto ok = bound_check(exactness, per_mode_bound(2, 0.0, 1.0, m1));
  CHECK(ok.holds);
  CHECK(ok.ratio <= 1e-10);

  const auto measured =
      quadrature_report(poles_and_residues(4), analytic_mode("runge2"), 5.0, 1.0, 1e-12);
  const double m2 = estimate_M(analytic_mode("runge2"), 1.0, 4096);
  const auto dominated = bound_check(measured, per_mode_bound(4, 5.0, 1.0, m2));
  CHECK(dominated.holds);
  CHECK(dominated.ratio > 0.0);
  CHECK(dominated.ratio < 1.0);

  QuadratureReport synthetic;
  synthetic.abs_error = 0.1;
  CHECK_THROWS_AS(bound_check(synthetic, 0.0), DegenerateBound);
  synthetic.abs_error = 0.0;
  const auto degenerate_ok = bound_check(synthetic, 0.0);
  CHECK(degenerate_ok.holds);
  CHECK(degenerate_ok.ratio == 0.0);
}

TEST_CASE("measured pole-sum error is dominated by the per-mode bound") {
  for (const char* name : {"runge2", "gauss"}) {
    const AnalyticMode g = analytic_mode(name);
    const double M = estimate_M(g, 1.0, 4096);
    for (int n : {2, 4, 8, 16}) {
      for (double t : {0.0, 1.0, 5.0, 10.0}) {
        const auto report = quadrature_report(poles_and_residues(n), g, t, 1.0, 1e-10);
        CHECK(bound_check(report, per_mode_bound(n, t, 1.0, M)).holds);
      }
    }
  }
}
