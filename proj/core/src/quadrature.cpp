#include "radbc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace radbc {

namespace {

const std::vector<std::pair<std::string, AnalyticMode>>& mode_table() {
  static const auto* table = new std::vector<std::pair<std::string, AnalyticMode>>{
      {"const1",
       {"const1", [](Complex) { return Complex(1.0); }, [](Complex) { return Complex(0.0); },
        [](Complex) { return Complex(0.0); }}},
      {"z",
       {"z", [](Complex z) { return z; }, [](Complex) { return Complex(1.0); },
        [](Complex) { return Complex(0.0); }}},
      {"z2",
       {"z2", [](Complex z) { return z * z; }, [](Complex z) { return 2.0 * z; },
        [](Complex) { return Complex(2.0); }}},
      {"z3",
       {"z3", [](Complex z) { return z * z * z; }, [](Complex z) { return 3.0 * z * z; },
        [](Complex z) { return 6.0 * z; }}},
      {"z4",
       {"z4", [](Complex z) { return z * z * z * z; },
        [](Complex z) { return 4.0 * z * z * z; }, [](Complex z) { return 12.0 * z * z; }}},
      {"runge2",
       {"runge2", [](Complex z) { return 1.0 / (z + 2.0); },
        [](Complex z) { return -1.0 / ((z + 2.0) * (z + 2.0)); },
        [](Complex z) { return 2.0 / ((z + 2.0) * (z + 2.0) * (z + 2.0)); }}},
      {"gauss",
       {"gauss", [](Complex z) { return std::exp(-z * z); },
        [](Complex z) { return -2.0 * z * std::exp(-z * z); },
        [](Complex z) { return (4.0 * z * z - 2.0) * std::exp(-z * z); }}},
  };
  return *table;
}

// 7-point Gauss / 15-point Kronrod pair on [-1, 1].
constexpr double kKronrodX[8] = {
    0.99145537112081264, 0.94910791234275852, 0.86486442335976907, 0.74153118559939444,
    0.58608723546769113, 0.40584515137739717, 0.20778495500789847, 0.0};
constexpr double kKronrodW[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018, 0.14065325971552592,
    0.16900472663926790, 0.19035057806478541, 0.20443294007529889, 0.20948214108472783};
constexpr double kGaussW[4] = {
    0.12948496616886969, 0.27970539148927666, 0.38183005050511894, 0.41795918367346939};

struct Segment {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <typename F>
Segment gauss_kronrod_15(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  Complex fm[7], fp[7];
  for (int i = 0; i < 7; ++i) {
    fm[i] = f(mid - hw * kKronrodX[i]);
    fp[i] = f(mid + hw * kKronrodX[i]);
  }
  const Complex fc = f(mid);
  Complex kron = kKronrodW[7] * fc;
  for (int i = 0; i < 7; ++i) kron += kKronrodW[i] * (fm[i] + fp[i]);
  // The embedded Gauss-7 nodes are the odd-indexed Kronrod abscissae.
  Complex gauss = kGaussW[3] * fc;
  for (int i = 0; i < 3; ++i) gauss += kGaussW[i] * (fm[2 * i + 1] + fp[2 * i + 1]);
  return {a, b, hw * kron, std::abs(hw * (kron - gauss))};
}

}  // namespace

AnalyticMode analytic_mode(const std::string& name) {
  for (const auto& [key, mode] : mode_table())
    if (key == name) return mode;
  throw UnknownFunction("analytic_mode: no registered function named '" + name + "'");
}

const std::vector<std::string>& registered_mode_names() {
  static const auto* names = [] {
    auto* v = new std::vector<std::string>;
    for (const auto& [key, mode] : mode_table()) v->push_back(key);
    return v;
  }();
  return *names;
}

Complex exact_branchcut_integral(const AnalyticMode& g, double t, double k_abs, double tol) {
  if (!(tol >= 1e-14)) throw std::invalid_argument("exact_branchcut_integral: tol must be >= 1e-14");
  if (!(t >= 0.0)) throw std::invalid_argument("exact_branchcut_integral: t must be >= 0");
  if (!(k_abs > 0.0)) throw std::invalid_argument("exact_branchcut_integral: k_abs must be > 0");

  long evals = 0;
  const auto integrand = [&](double th) {
    ++evals;
    const double c = std::cos(th);
    const double s = std::sin(th);
    return g.eval(Complex(0.0, c)) * std::exp(Complex(0.0, t * c)) * (s * s);
  };

  std::priority_queue<Segment> queue;
  Complex total = 0.0;
  double err_total = 0.0;
  const int initial = 8;
  for (int i = 0; i < initial; ++i) {
    const double a = std::numbers::pi * i / initial;
    const double b = std::numbers::pi * (i + 1) / initial;
    Segment s = gauss_kronrod_15(integrand, a, b);
    total += s.value;
    err_total += s.error;
    queue.push(s);
  }
  while (err_total > tol && !queue.empty()) {
    if (evals > 1'000'000)
      throw ToleranceNotMet("exact_branchcut_integral: 10^6 evaluations exceeded at tol=" +
                            std::to_string(tol));
    Segment worst = queue.top();
    queue.pop();
    total -= worst.value;
    err_total -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    for (const Segment& s :
         {gauss_kronrod_15(integrand, worst.a, mid), gauss_kronrod_15(integrand, mid, worst.b)}) {
      total += s.value;
      err_total += s.error;
      queue.push(s);
    }
  }
  return Complex(0.0, 2.0 * k_abs) * total;
}

Complex pole_sum(const RationalDtn& abc, const AnalyticMode& g, double t, double k_abs) {
  if (!(t >= 0.0)) throw std::invalid_argument("pole_sum: t must be >= 0");
  if (!(k_abs > 0.0)) throw std::invalid_argument("pole_sum: k_abs must be > 0");
  Complex acc = 0.0;
  for (int j = 0; j < abc.order; ++j)
    acc += g.eval(abc.poles[j]) * std::exp(abc.poles[j] * t) * abc.residues[j];
  return Complex(0.0, 2.0 * std::numbers::pi * k_abs) * acc;
}

QuadratureRule gauss_chebyshev_u_rule(int n) {
  const RationalDtn abc = poles_and_residues(n);
  QuadratureRule rule;
  rule.name = "gcu";
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int j = 0; j < n; ++j) {
    rule.nodes[j] = abc.poles[j].imag();  // cos(theta_j), decreasing in j
    rule.weights[j] = std::numbers::pi * abc.residues[j];
  }
  return rule;
}

QuadratureRule gauss_legendre_folded_rule(int m) {
  if (m < 1 || m > 256)
    throw std::invalid_argument("gauss_legendre_folded_rule: m must be in [1, 256]");
  QuadratureRule rule;
  rule.name = "gl";
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int j = 1; j <= m; ++j) {
    double x = std::cos(std::numbers::pi * (j - 0.25) / (m + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre P_m(x) and P_{m-1}(x) by recurrence.
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-14) break;
    }
    const double v = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[j - 1] = x;  // cos(..) ordering gives decreasing nodes
    rule.weights[j - 1] = v * std::sqrt(std::max(0.0, 1.0 - x * x));
  }
  return rule;
}

Complex rule_sum(const QuadratureRule& rule, const AnalyticMode& g, double t, double k_abs) {
  if (rule.nodes.size() != rule.weights.size())
    throw std::invalid_argument("rule_sum: node/weight size mismatch");
  Complex acc = 0.0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const Complex zj(0.0, rule.nodes[j]);
    acc += rule.weights[j] * g.eval(zj) * std::exp(Complex(0.0, rule.nodes[j] * t));
  }
  return Complex(0.0, 2.0 * k_abs) * acc;
}

namespace {

QuadratureReport make_report(Complex exact, Complex approx, std::string rule_name, int n_nodes,
                             double t, double k_abs) {
  QuadratureReport r;
  r.exact = exact;
  r.approx = approx;
  r.abs_error = std::abs(exact - approx);
  r.rule_name = std::move(rule_name);
  r.n_nodes = n_nodes;
  r.t = t;
  r.k_abs = k_abs;
  return r;
}

}  // namespace

QuadratureReport quadrature_report(const RationalDtn& abc, const AnalyticMode& g, double t,
                                   double k_abs, double tol) {
  return make_report(exact_branchcut_integral(g, t, k_abs, tol), pole_sum(abc, g, t, k_abs),
                     "polesum", abc.order, t, k_abs);
}

QuadratureReport quadrature_report(const QuadratureRule& rule, const AnalyticMode& g, double t,
                                   double k_abs, double tol) {
  return make_report(exact_branchcut_integral(g, t, k_abs, tol), rule_sum(rule, g, t, k_abs),
                     rule.name, static_cast<int>(rule.nodes.size()), t, k_abs);
}

}  // namespace radbc
