#include "curvebound/classical.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "curvebound/kernels.hpp"
#include "curvebound/roots.hpp"

namespace curvebound {
namespace {

// coth_kernel(w) - 1 without cancellation near w = 0; feeds the difference
// t coth(Kt) - s coth(Ks) = [.](K^2 t^2) - [.](K^2 s^2)) / K, whose leading
// 1/K parts cancel exactly.
double coth_kernel_minus_one(double w) {
  if (std::abs(w) < kKernelSeriesThreshold) {
    return w * (1.0 / 3.0 + w * (-1.0 / 45.0 + w * (2.0 / 945.0 +
               w * (-1.0 / 4725.0 + w * (2.0 / 93555.0)))));
  }
  return coth_kernel(w) - 1.0;
}

// log(e^x - 1 - x) for x > 0, stable at both ends: series through x^2/2 near
// 0, expm1 in the middle, and x + log1p(-(1+x)e^{-x}) once e^x is large.
double log_exp_remainder(double x) {
  if (x < 0.25) {
    const double series =
        1.0 + x * (1.0 / 3.0 +
                   x * (1.0 / 12.0 +
                        x * (1.0 / 60.0 + x * (1.0 / 360.0 + x * (1.0 / 2520.0)))));
    return 2.0 * std::log(x) - std::log(2.0) + std::log(series);
  }
  if (x < 40.0) return std::log(std::expm1(x) - x);
  return x + std::log1p(-(1.0 + x) * std::exp(-x));
}

// Tangent line to the profile at the point with kernel argument w0:
// slope (rho/2)*a and offset b in the profile variables, i.e.
// phi(rho,t,x) <= (rho/2) a x + b with equality at x0 = 1 - w0/(rho t)^2.
LinearBound tangent_bound(double rho, double t, double w0) {
  const double f = coth_kernel(w0);
  const double fp = coth_kernel_deriv(w0);
  LinearBound lb;
  lb.a = 1.0 - 2.0 * rho * t * fp;
  lb.b = f / t - rho + (rho * rho * t * t - w0) * fp / t;
  return lb;
}

double g_new(double K, double t, double x) { return 2.0 / K * phi(-K, t, x); }

double davies_envelope(double r, double x, double alpha) {
  return -alpha * x + alpha * alpha / (alpha - 1.0) + 2.0 * r * alpha * alpha;
}

double bakry_qian_envelope(double r, double x) {
  const double disc = 2.0 + 4.0 * r - x;
  if (disc < 0.0) return -std::numeric_limits<double>::infinity();
  return 2.0 + 2.0 * r - x + 2.0 * std::sqrt(disc);
}

double yau_envelope(double r, double x) {
  const double disc = 20.0 + 8.0 * r - 2.0 * x;
  if (disc < 0.0) return -std::numeric_limits<double>::infinity();
  return 4.0 + 2.0 * r - x + 2.0 * std::sqrt(disc);
}

double hamilton_envelope(double s, double x) {
  return -std::exp(2.0 * s) * x + 2.0 / s * std::exp(4.0 * s);
}

double li_xu_envelope(double K, double t, double x) {
  const LinearBound lb = linearized_bound_hyperbolic(-K, t, K);
  // G <= -a X + (4/(nK)) (n/2) b with b = K(1+coth(Kt)).
  return -lb.a * x + 2.0 * lb.b / K;
}

}  // namespace

NormalizedState make_normalized_state(double K, double t, double x, double g) {
  if (!(K > 0.0)) throw std::invalid_argument("make_normalized_state: requires K > 0");
  if (!(t > 0.0)) throw std::domain_error("make_normalized_state: requires t > 0");
  return {x, g, 1.0 / (K * t), K * t};
}

LinearBound linearized_bound_hyperbolic(double rho, double t, double alpha) {
  if (rho == 0.0) throw std::invalid_argument("linearized_bound_hyperbolic: requires rho != 0");
  if (!(t > 0.0)) throw std::domain_error("linearized_bound_hyperbolic: requires t > 0");
  if (!(alpha >= 0.0)) throw std::domain_error("linearized_bound_hyperbolic: requires alpha >= 0");
  return tangent_bound(rho, t, alpha * alpha * t * t);
}

LinearBound linearized_bound_trigonometric(double rho, double t, double beta) {
  if (rho == 0.0) throw std::invalid_argument("linearized_bound_trigonometric: requires rho != 0");
  if (!(t > 0.0)) throw std::domain_error("linearized_bound_trigonometric: requires t > 0");
  if (!(beta > 0.0 && beta * t < kPi)) {
    throw std::domain_error("linearized_bound_trigonometric: requires 0 < beta < pi/t");
  }
  return tangent_bound(rho, t, -beta * beta * t * t);
}

double bound_classical_liyau(double n, double t, double v) {
  if (!(t > 0.0)) throw std::domain_error("bound_classical_liyau: requires t > 0");
  return v + 0.5 * n / t;
}

bool satisfies_davies(const NormalizedState& ns, double alpha) {
  if (!(alpha > 1.0)) throw std::domain_error("satisfies_davies: requires alpha > 1");
  return ns.g <= davies_envelope(ns.r, ns.x, alpha);
}

bool satisfies_yau(const NormalizedState& ns, double n, double K, double t) {
  // Stated in (Gamma, L, P) variables; recovered from the normalized state.
  const double gamma_ratio = 0.25 * n * K * ns.g;          // Gamma(P)/P^2
  const double l_ratio = -0.25 * n * K * ns.x;             // L P / P
  const double rhs = std::sqrt(2.0 * n * K) *
                         std::sqrt(gamma_ratio + 0.5 * n / t + 2.0 * n * K) +
                     0.5 * n / t;
  return gamma_ratio - l_ratio <= rhs;
}

bool satisfies_bakry_qian(const NormalizedState& ns) {
  return ns.x <= -ns.g + 2.0 * ns.r + 2.0 * std::sqrt(ns.g + 1.0 + 2.0 * ns.r);
}

bool satisfies_hamilton(const NormalizedState& ns) {
  return ns.x <= -std::exp(-2.0 * ns.s) * ns.g + 2.0 / ns.s * std::exp(2.0 * ns.s);
}

bool satisfies_li_xu(const NormalizedState& ns, double n, double K, double t) {
  const LinearBound lb = linearized_bound_hyperbolic(-K, t, K);
  const double gamma_ratio = 0.25 * n * K * ns.g;
  const double l_ratio = -0.25 * n * K * ns.x;
  return gamma_ratio <= lb.a * l_ratio + 0.5 * n * lb.b;
}

double li_xu_harnack_exponent(double n, double K, double s, double t, double d) {
  if (!(K > 0.0)) throw std::invalid_argument("li_xu_harnack_exponent: requires K > 0");
  if (!(0.0 < s && s < t)) {
    throw std::domain_error("li_xu_harnack_exponent: requires 0 < s < t");
  }
  if (!(d >= 0.0)) throw std::domain_error("li_xu_harnack_exponent: requires d >= 0");
  const double log_ratio = log_exp_remainder(2.0 * K * t) - log_exp_remainder(2.0 * K * s);
  const double coth_diff =
      (coth_kernel_minus_one(K * K * t * t) - coth_kernel_minus_one(K * K * s * s)) / K;
  return 0.25 * n * log_ratio +
         d * d / (4.0 * (t - s)) * (1.0 + coth_diff / (t - s));
}

std::vector<MarginReport> dominance_report(const CurvatureDimension& cd, double t, int grid_size) {
  if (!(cd.rho < 0.0)) throw std::invalid_argument("dominance_report: requires rho < 0");
  if (!(t > 0.0)) throw std::domain_error("dominance_report: requires t > 0");
  if (grid_size < 2) throw std::invalid_argument("dominance_report: requires grid_size >= 2");

  const double K = -cd.rho;
  const double r = 1.0 / (K * t);
  const double s = K * t;
  const double x_hi = find_roots(cd.rho, t).sole_root.value();
  const double x_lo = -50.0;

  std::vector<MarginReport> reports;
  const double tol = 1e-10;

  auto sweep = [&](const std::string& name, auto&& envelope) {
    MarginReport rep;
    rep.check = name;
    rep.tolerance = tol;
    rep.argmin_time = t;
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_size; ++i) {
      const double x = x_lo + (x_hi - x_lo) * i / (grid_size - 1);
      const double margin = envelope(x) - g_new(K, t, x);
      if (margin < rep.min_margin) {
        rep.min_margin = margin;
        rep.argmin_node = i;
      }
    }
    rep.passed = rep.min_margin >= -tol;
    reports.push_back(rep);
  };

  sweep("davies(alpha=1.1)", [&](double x) { return davies_envelope(r, x, 1.1); });
  sweep("davies(alpha=2)", [&](double x) { return davies_envelope(r, x, 2.0); });
  sweep("davies(alpha=10)", [&](double x) { return davies_envelope(r, x, 10.0); });
  sweep("bakry_qian", [&](double x) { return bakry_qian_envelope(r, x); });
  sweep("hamilton", [&](double x) { return hamilton_envelope(s, x); });
  sweep("li_xu", [&](double x) { return li_xu_envelope(K, t, x); });
  sweep("yau", [&](double x) { return yau_envelope(r, x); });
  return reports;
}

}  // namespace curvebound
