#pragma once

// Scalar kernels for the concave gradient-bound profile and its relatives.
//
// Everything in this library funnels through one real-analytic kernel
//
//   coth_kernel(w) = sqrt(w) * coth(sqrt(w))    for w > 0
//                  = 1                          at  w = 0
//                  = sqrt(-w) * cot(sqrt(-w))   for -pi^2 < w < 0
//
// which continues y*coth(y) through the removable singularity at y = 0 (the
// trigonometric branch is the same function evaluated at imaginary argument).
// Writing the profile as
//
//   phi(rho, t, x) = (rho/2) * (x - 2) + coth_kernel(rho^2 t^2 (1 - x)) / t
//
// collapses the hyperbolic (x < 1) and trigonometric (x > 1) branches into a
// single expression and eliminates the catastrophic cancellation both literal
// branch formulas suffer near x = 1.  phi is strictly concave and C^inf on
// (-inf, 1 + pi^2/(rho t)^2) and tends to -inf at both ends.
//
// Near w = 0 all kernels switch to their Maclaurin series; six terms at
// |w| < 1e-4 leave a truncation error below 1e-24, far under double rounding.

#include <cmath>
#include <limits>
#include <stdexcept>

#include "curvebound/types.hpp"

namespace curvebound {

inline constexpr double kKernelSeriesThreshold = 1e-4;
inline constexpr double kPi = 3.141592653589793;
inline constexpr double kPiSquared = 9.869604401089358;  // pi^2, kernel pole location

// sqrt(w)*coth(sqrt(w)) continued through w = 0; defined for w > -pi^2.
// Series: 1 + w/3 - w^2/45 + 2 w^3/945 - w^4/4725 + 2 w^5/93555 + O(w^6).
[[nodiscard]] inline double coth_kernel(double w) {
  if (!(w > -kPiSquared)) {
    throw std::domain_error("coth_kernel: requires w > -pi^2");
  }
  if (std::abs(w) < kKernelSeriesThreshold) {
    return 1.0 + w * (1.0 / 3.0 + w * (-1.0 / 45.0 + w * (2.0 / 945.0 +
               w * (-1.0 / 4725.0 + w * (2.0 / 93555.0)))));
  }
  if (w > 0.0) {
    const double y = std::sqrt(w);
    return y / std::tanh(y);  // stable for all y; -> y as y -> inf
  }
  const double y = std::sqrt(-w);  // y in (0, pi)
  return y * std::cos(y) / std::sin(y);
}

// d/dw of coth_kernel.  Positive and strictly decreasing on (-pi^2, inf);
// equals (sinh(2y) - 2y) / (4 y sinh^2 y) with y = sqrt(w) on the hyperbolic
// branch and (2y - sin(2y)) / (4 y sin^2 y) with y = sqrt(-w) on the
// trigonometric one.  Series: 1/3 - 2w/45 + 2w^2/315 - 4w^3/4725 + O(w^4).
[[nodiscard]] inline double coth_kernel_deriv(double w) {
  if (!(w > -kPiSquared)) {
    throw std::domain_error("coth_kernel_deriv: requires w > -pi^2");
  }
  if (std::abs(w) < kKernelSeriesThreshold) {
    return 1.0 / 3.0 + w * (-2.0 / 45.0 + w * (2.0 / 315.0 +
               w * (-4.0 / 4725.0 + w * (2.0 / 18711.0))));
  }
  if (w > 0.0) {
    const double y = std::sqrt(w);
    if (y > 20.0) {
      // sinh overflows long before y ~ 1e308; by y = 20 the exact value is
      // 1/(2y) + (1/y - 2) e^{-2y} up to relative 1e-17.
      return 0.5 / y + (1.0 / y - 2.0) * std::exp(-2.0 * y);
    }
    const double sh = std::sinh(y);
    return (std::sinh(2.0 * y) - 2.0 * y) / (4.0 * y * sh * sh);
  }
  const double y = std::sqrt(-w);  // y in (0, pi); diverges as y -> pi
  const double sn = std::sin(y);
  return (2.0 * y - std::sin(2.0 * y)) / (4.0 * y * sn * sn);
}

// sinh(sqrt(w))/sqrt(w) continued through w = 0 (entire in w; equals
// sin(sqrt(-w))/sqrt(-w) for w < 0).  Series: 1 + w/6 + w^2/120 + w^3/5040.
[[nodiscard]] inline double sinhc_kernel(double w) {
  if (std::abs(w) < kKernelSeriesThreshold) {
    return 1.0 + w * (1.0 / 6.0 + w * (1.0 / 120.0 + w * (1.0 / 5040.0)));
  }
  if (w > 0.0) {
    const double y = std::sqrt(w);
    return std::sinh(y) / y;
  }
  const double y = std::sqrt(-w);
  return std::sin(y) / y;
}

// Right edge of phi's domain: 1 + pi^2/(rho t)^2 (+inf when rho = 0).
[[nodiscard]] inline double phi_domain_limit(double rho, double t) {
  if (!(t > 0.0)) throw std::domain_error("phi_domain_limit: requires t > 0");
  if (rho == 0.0) return std::numeric_limits<double>::infinity();
  const double rt = rho * t;
  return 1.0 + kPiSquared / (rt * rt);
}

// The concave bound profile phi(rho, t, x); see the header comment.
// Anchors: phi(rho, t, 1) = 1/t - rho/2 and phi -> -inf at the domain edge.
// rho = 0 is rejected: the flat-case limit formulas live with the classical
// bounds, keeping this formula's domain honest.
[[nodiscard]] inline double phi(double rho, double t, double x) {
  if (rho == 0.0) throw std::invalid_argument("phi: requires rho != 0");
  if (!(t > 0.0)) throw std::domain_error("phi: requires t > 0");
  const double w = rho * rho * t * t * (1.0 - x);
  if (!(w > -kPiSquared)) {
    throw std::domain_error("phi: x must satisfy x < 1 + pi^2/(rho*t)^2");
  }
  return 0.5 * rho * (x - 2.0) + coth_kernel(w) / t;
}

// d/dx phi(rho, t, x) = rho/2 - rho^2 t * coth_kernel_deriv(rho^2 t^2 (1-x)).
// Strictly decreasing in x (phi is strictly concave).
[[nodiscard]] inline double phi_prime(double rho, double t, double x) {
  if (rho == 0.0) throw std::invalid_argument("phi_prime: requires rho != 0");
  if (!(t > 0.0)) throw std::domain_error("phi_prime: requires t > 0");
  const double w = rho * rho * t * t * (1.0 - x);
  if (!(w > -kPiSquared)) {
    throw std::domain_error("phi_prime: x must satisfy x < 1 + pi^2/(rho*t)^2");
  }
  return 0.5 * rho - rho * rho * t * coth_kernel_deriv(w);
}

// Companion profile phi_tilde = phi - rho*x + 2*rho appearing on the
// forward side of the local log-Sobolev pair.
[[nodiscard]] inline double phi_tilde(double rho, double t, double x) {
  return phi(rho, t, x) - rho * x + 2.0 * rho;
}

// Pointwise large-time limit of phi for rho < 0, defined for x <= 1:
// the coth factor tends to -1 (its argument -> -inf), leaving
// (rho/2)(x-2) + |rho| sqrt(1-x).  Sits below every finite-t profile.
[[nodiscard]] inline double phi_large_time_limit(double rho, double x) {
  if (!(rho < 0.0)) throw std::domain_error("phi_large_time_limit: requires rho < 0");
  if (!(x <= 1.0)) throw std::domain_error("phi_large_time_limit: requires x <= 1");
  return 0.5 * rho * (x - 2.0) - rho * std::sqrt(1.0 - x);
}

// Right-hand side of the curvature-dimension gradient bound:
// Gamma(log P_t f) <= (n/2) * phi(rho, t, X) with X = 4 L P_t f/(n rho P_t f).
[[nodiscard]] inline double liyau_rhs(const CurvatureDimension& cd, double t, double x) {
  return 0.5 * cd.n * phi(cd.rho, t, x);
}

}  // namespace curvebound
