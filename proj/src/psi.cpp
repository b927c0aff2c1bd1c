#include "curvebound/psi.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "curvebound/kernels.hpp"
#include "curvebound/quadrature.hpp"
#include "curvebound/roots.hpp"

namespace curvebound {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Profile value under the square root, clamped to 0 just below it: domain
// endpoints computed from root enclosures land within bisection width of the
// exact root, where the profile can round to a tiny negative number.
double profile_for_psi(const CurvatureDimension& cd, double t, double x) {
  const double u = 4.0 * x / (cd.n * cd.rho);
  double p;
  try {
    p = phi(cd.rho, t, u);
  } catch (const std::domain_error&) {
    throw std::domain_error("psi: x outside the domain (4x/(n rho) beyond the profile domain)");
  }
  if (p >= 0.0) return p;
  if (p > -1e-10 * std::max(1.0, std::abs(cd.rho))) return 0.0;
  throw std::domain_error("psi: x outside the domain (profile negative at 4x/(n rho))");
}

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

// Whether psi_prime can be evaluated at x.  The stored domain endpoints are
// root-enclosure midpoints, so points within rounding distance of them can
// land on either side of the true root; the evaluated profile must come out
// strictly positive.
bool evaluably_interior(const CurvatureDimension& cd, double t, double x) {
  return phi(cd.rho, t, 4.0 * x / (cd.n * cd.rho)) > 0.0;
}

// Locate [a, b] with psi_prime(a) < z < psi_prime(b), approaching divergent
// endpoints geometrically in distance-to-endpoint.  When z lies beyond every
// representable value (psi_prime runs into the boundary's rounding strip
// first), the walk saturates at the innermost point it could still evaluate;
// the inverse then converges onto that endpoint, clamping the solution.
Bracket bracket_psi_prime(const CurvatureDimension& cd, double t, double z) {
  const PsiDomain dom = psi_domain(cd, t);
  Bracket br;
  if (cd.rho > 0.0) {
    const double width = dom.hi - dom.lo;
    double step = 0.25 * width;
    double inner = dom.lo + step;  // quarter point: safely interior
    for (;;) {
      const double a = dom.lo + step;
      if (a <= dom.lo || !evaluably_interior(cd, t, a)) {
        br.lo = inner;
        break;
      }
      if (psi_prime(cd, t, a) < z) {
        br.lo = a;
        break;
      }
      inner = a;
      step *= 0.5;
    }
    step = 0.25 * width;
    inner = dom.hi - step;
    for (;;) {
      const double b = dom.hi - step;
      if (b >= dom.hi || !evaluably_interior(cd, t, b)) {
        br.hi = inner;
        break;
      }
      if (psi_prime(cd, t, b) > z) {
        br.hi = b;
        break;
      }
      inner = b;
      step *= 0.5;
    }
    return br;
  }
  // rho < 0: domain [lo, +inf), psi_prime onto (-inf, 0).
  const double scale = std::max(1.0, std::abs(dom.lo));
  double step = scale;
  double inner = dom.lo + step;
  for (;;) {
    const double a = dom.lo + step;
    if (a <= dom.lo || !evaluably_interior(cd, t, a)) {
      br.lo = inner;
      break;
    }
    if (psi_prime(cd, t, a) < z) {
      br.lo = a;
      break;
    }
    inner = a;
    step *= 0.5;
  }
  double b = br.lo;
  for (int i = 0; i < 2100 && psi_prime(cd, t, b) <= z; ++i) {
    b = dom.lo + (b - dom.lo) * 2.0 + scale;
    if (!std::isfinite(b)) {
      throw std::domain_error("psi_prime_inverse: z too close to 0 (solution overflows)");
    }
  }
  if (psi_prime(cd, t, b) <= z) {
    throw std::logic_error("psi_prime_inverse: right bracket not found");
  }
  br.hi = b;
  return br;
}

}  // namespace

PsiDomain psi_domain(const CurvatureDimension& cd, double t) {
  if (!(t > 0.0)) throw std::domain_error("psi_domain: requires t > 0");
  PsiDomain dom;
  if (cd.rho == 0.0) {
    dom.lo = -0.5 * cd.n / t;
    dom.hi = kInf;
    dom.hi_open = true;
    return dom;
  }
  const ProfileRoots roots = find_roots(cd.rho, t);
  const double quarter = 0.25 * cd.n * cd.rho;
  if (cd.rho > 0.0) {
    dom.lo = quarter * roots.negative_root.value();
    dom.hi = quarter * roots.positive_root.value();
  } else {
    dom.lo = quarter * roots.sole_root.value();  // rho < 0 flips the sign
    dom.hi = kInf;
    dom.hi_open = true;
  }
  return dom;
}

double psi(const CurvatureDimension& cd, double t, double x) {
  if (!(t > 0.0)) throw std::domain_error("psi: requires t > 0");
  if (cd.rho == 0.0) {
    const double arg = 0.5 * cd.n / t + x;
    if (arg < 0.0) throw std::domain_error("psi: requires x >= -n/(2t) for rho = 0");
    return -std::sqrt(arg);
  }
  const double p = profile_for_psi(cd, t, x);
  return p == 0.0 ? 0.0 : -std::sqrt(0.5 * cd.n * p);
}

double psi_prime(const CurvatureDimension& cd, double t, double x) {
  if (!(t > 0.0)) throw std::domain_error("psi_prime: requires t > 0");
  if (cd.rho == 0.0) {
    const double arg = 0.5 * cd.n / t + x;
    if (!(arg > 0.0)) throw std::domain_error("psi_prime: requires x > -n/(2t) for rho = 0");
    return -0.5 / std::sqrt(arg);
  }
  const double u = 4.0 * x / (cd.n * cd.rho);
  const double p = phi(cd.rho, t, u);
  if (!(p > 0.0)) {
    throw std::domain_error("psi_prime: x outside the open interior of the domain");
  }
  return -phi_prime(cd.rho, t, u) / (cd.rho * std::sqrt(0.5 * cd.n * p));
}

double psi_prime_inverse(const CurvatureDimension& cd, double t, double z) {
  if (!(t > 0.0)) throw std::domain_error("psi_prime_inverse: requires t > 0");
  if (cd.rho <= 0.0 && !(z < 0.0)) {
    throw std::domain_error("psi_prime_inverse: requires z < 0 when rho <= 0");
  }
  if (cd.rho == 0.0) return 0.25 / (z * z) - 0.5 * cd.n / t;

  // psi_prime extended across the boundary's rounding strip: a point where
  // the profile rounds to <= 0 sits at the edge the iteration is being pulled
  // toward, so report the divergent limit there and let the bracket push back.
  auto g = [&](double x) -> double {
    if (!evaluably_interior(cd, t, x)) return z < 0.0 ? -kInf : kInf;
    return psi_prime(cd, t, x);
  };

  Bracket br = bracket_psi_prime(cd, t, z);
  double ga = g(br.lo) - z;
  double gb = g(br.hi) - z;
  if (ga == 0.0) return br.lo;
  if (gb == 0.0) return br.hi;

  const double tol = 1e-12 * (1.0 + std::abs(z));
  double y = br.lo;
  double gy = ga;
  double y_prev = br.hi;
  double gy_prev = gb;
  for (int i = 0; i < 300; ++i) {
    double cand = y - gy * (y - y_prev) / (gy - gy_prev);  // secant step
    if (!std::isfinite(cand) || cand <= br.lo || cand >= br.hi) {
      cand = 0.5 * (br.lo + br.hi);  // bisection safeguard
    }
    if (cand <= br.lo || cand >= br.hi) break;  // bracket is one ULP wide
    const double gc = g(cand) - z;
    y_prev = y;
    gy_prev = gy;
    y = cand;
    gy = gc;
    if (std::abs(gc) <= tol) return cand;
    if (gc < 0.0) {
      br.lo = cand;
    } else {
      br.hi = cand;
    }
  }
  // Bracket exhausted at ULP width: return the endpoint with smaller residual.
  ga = g(br.lo) - z;
  gb = g(br.hi) - z;
  return std::abs(ga) <= std::abs(gb) ? br.lo : br.hi;
}

LegendreResult legendre_transform(const CurvatureDimension& cd, double t, double z) {
  if (cd.rho <= 0.0 && !(z < 0.0)) {
    throw std::domain_error(
        "legendre_transform: requires z < 0 when rho <= 0 (comparison runs forward in time only)");
  }
  LegendreResult res;
  res.argmax = psi_prime_inverse(cd, t, z);
  res.value = z * res.argmax - psi(cd, t, res.argmax);
  return res;
}

HarnackExponent harnack_exponent(const CurvatureDimension& cd, const HarnackQuery& q) {
  if (!(q.s > 0.0) || !(q.t > 0.0)) {
    throw std::domain_error("harnack_exponent: requires s > 0 and t > 0");
  }
  if (!(q.d >= 0.0)) throw std::domain_error("harnack_exponent: requires d >= 0");
  if (cd.rho <= 0.0 && !(q.s < q.t)) {
    throw std::domain_error("harnack_exponent: requires s < t when rho <= 0");
  }

  HarnackExponent result;
  double d = q.d;
  if (d == 0.0) {
    if (cd.rho == 0.0) {
      result.value = 0.5 * cd.n * std::log(q.t / q.s);
      return result;
    }
    d = 1e-8;  // no closed-form limit for rho != 0
    result.approximate = true;
  }
  if (q.s == q.t) {
    // Equal-time comparison (rho > 0 only, enforced above): the integral
    // average collapses to the integrand at t.
    result.value = d * legendre_transform(cd, q.t, 0.0).value;
    return result;
  }
  const double z = -(q.t - q.s) / d;
  const double integral = adaptive_simpson(
      [&](double u) { return legendre_transform(cd, u, z).value; }, q.s, q.t, 1e-10, 1e-14, 40);
  result.value = d / (q.t - q.s) * integral;
  return result;
}

double heat_kernel_ratio_bound(const CurvatureDimension& cd, const HarnackQuery& q) {
  return std::exp(harnack_exponent(cd, q).value);
}

}  // namespace curvebound
