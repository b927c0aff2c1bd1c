#pragma once

// The Harnack side of the gradient bound: the convex companion
//
//   Psi(x) = -sqrt((n/2) * phi(rho, t, 4x/(n rho)))     (rho != 0)
//   Psi(x) = -sqrt(n/(2t) + x)                          (rho  = 0)
//
// defined where the profile under the square root is nonnegative, together
// with its derivative, the derivative's inverse, the Legendre transform
// Psi*(z) = sup_y {zy - Psi(y)}, and the wave-front exponent obtained by
// integrating Psi* in time.  Psi is strictly convex with Psi' a monotone
// bijection onto R (rho > 0) or (-inf, 0) (rho <= 0), so the Legendre
// supremum is computed by inverting Psi' rather than by grid search.
//
// Psi and Psi' need no root-finding (only profile evaluations and a
// positivity check); only the domain endpoints and the inverse do.

#include "curvebound/types.hpp"

namespace curvebound {

struct PsiDomain {
  double lo = 0.0;
  double hi = 0.0;  // +inf when unbounded above
  bool lo_open = false;
  bool hi_open = false;
};

struct LegendreResult {
  double value = 0.0;   // Psi*(z) >= 0
  double argmax = 0.0;  // the maximizer, interior to the domain
};

// A semigroup comparison query: value at time s and distance d away is
// bounded through the value at time t.  rho <= 0 admits only s < t.
struct HarnackQuery {
  double s = 0.0;
  double t = 0.0;
  double d = 0.0;  // geodesic distance >= 0
};

struct HarnackExponent {
  double value = 0.0;
  // True only for the d = 0, rho != 0 case, which is evaluated at d = 1e-8
  // instead of a closed-form limit.
  bool approximate = false;
};

// Domain of Psi: [n rho xi_-/4, n rho xi_+/4] for rho > 0 (roots of the
// profile), [n rho xi/4, +inf) for rho < 0, [-n/(2t), +inf) for rho = 0.
PsiDomain psi_domain(const CurvatureDimension& cd, double t);

// Psi at x; exactly 0 at finite domain endpoints.  Throws std::domain_error
// outside the domain.
double psi(const CurvatureDimension& cd, double t, double x);

// dPsi/dx = -phi'(u) / (rho sqrt((n/2) phi(u))), u = 4x/(n rho); increasing.
// Defined on the open interior (it diverges at finite endpoints).
double psi_prime(const CurvatureDimension& cd, double t, double x);

// Inverse of psi_prime: the unique y with psi_prime(y) = z.  Safeguarded
// secant iteration inside a certified bracket, with the bracket endpoints
// approached geometrically in distance-to-endpoint where psi_prime diverges.
// Range: z arbitrary for rho > 0; z < 0 required for rho <= 0.
double psi_prime_inverse(const CurvatureDimension& cd, double t, double z);

// Legendre transform Psi*(z) via stationarity: argmax = psi_prime_inverse(z),
// value = z * argmax - psi(argmax).  Nonnegative.
LegendreResult legendre_transform(const CurvatureDimension& cd, double t, double z);

// Exponent E >= 0 of the Harnack comparison:
//   E = (d/(t-s)) * integral_s^t Psi*_u(-(t-s)/d) du,
// by adaptive quadrature.  Special cases: s = t (rho > 0) gives d * Psi*_t(0)
// exactly; d = 0 gives (n/2) log(t/s) exactly for rho = 0 and a flagged
// d = 1e-8 evaluation otherwise.
HarnackExponent harnack_exponent(const CurvatureDimension& cd, const HarnackQuery& q);

// exp of the exponent: the multiplicative kernel-comparison factor.
double heat_kernel_ratio_bound(const CurvatureDimension& cd, const HarnackQuery& q);

}  // namespace curvebound
