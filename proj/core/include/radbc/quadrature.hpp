#ifndef RADBC_QUADRATURE_HPP
#define RADBC_QUADRATURE_HPP

#include <functional>
#include <string>
#include <vector>

#include "radbc/rational_dtn.hpp"

namespace radbc {

// A named analytic function g on a neighbourhood of the segment [-i, i],
// together with closed-form first and second derivatives. The closed-form
// derivatives exist so that downstream bound estimates are free of
// finite-difference noise.
struct AnalyticMode {
  std::string name;
  std::function<Complex(Complex)> eval;
  std::function<Complex(Complex)> eval_d1;
  std::function<Complex(Complex)> eval_d2;
};

// Built-in test functions: const1, z, z2, z3, z4, runge2 (1/(z+2)),
// gauss (exp(-z^2)). Throws UnknownFunction for anything else.
AnalyticMode analytic_mode(const std::string& name);
const std::vector<std::string>& registered_mode_names();

// Nodes y_j in [-1, 1] (strictly decreasing) and weights w_j approximating
//   integral_{-1}^{1} sqrt(1-y^2) G(y) dy  ~  sum_j w_j G(y_j).
struct QuadratureRule {
  std::string name;
  std::vector<double> nodes;
  std::vector<double> weights;
};

struct QuadratureReport {
  Complex exact{};
  Complex approx{};
  double abs_error = 0.0;
  std::string rule_name;
  int n_nodes = 0;
  double t = 0.0;
  double k_abs = 0.0;
};

// High-accuracy oracle for the branch-segment integral
//   2i k |integral_0^pi g(i cos th) e^{i t cos th} sin^2(th) dth|,
// equal to 2k * integral_{-i}^{i} sqrt(1+z^2) g(z) e^{zt} dz. Adaptive
// Gauss-Kronrod bisection in th with absolute-error target `tol`
// (tol >= 1e-14); throws ToleranceNotMet past 10^6 integrand evaluations.
Complex exact_branchcut_integral(const AnalyticMode& g, double t, double k_abs, double tol);

// Residue sum 2 pi i k * sum_j g(z_j) e^{z_j t} alpha_j.
Complex pole_sum(const RationalDtn& abc, const AnalyticMode& g, double t, double k_abs);

// Gauss-Chebyshev (second kind) rule: nodes cos(j pi/(n+1)), weights
// pi sin^2(j pi/(n+1))/(n+1). Applied through rule_sum it reproduces
// pole_sum exactly.
QuadratureRule gauss_chebyshev_u_rule(int n);

// m-point Gauss-Legendre nodes with the sqrt(1-y^2) weight folded into the
// Legendre weights, so the rule targets the same weighted integral.
// m in [1, 256]; nodes found by Newton iteration to 1e-14.
QuadratureRule gauss_legendre_folded_rule(int m);

// 2i k * sum_j w_j g(i y_j) e^{i y_j t}.
Complex rule_sum(const QuadratureRule& rule, const AnalyticMode& g, double t, double k_abs);

// Oracle value, approximation, and absolute error in one record.
QuadratureReport quadrature_report(const RationalDtn& abc, const AnalyticMode& g, double t,
                                   double k_abs, double tol);
QuadratureReport quadrature_report(const QuadratureRule& rule, const AnalyticMode& g, double t,
                                   double k_abs, double tol);

}  // namespace radbc

#endif  // RADBC_QUADRATURE_HPP
