#include "curvebound/roots.hpp"

#include <cmath>
#include <stdexcept>

#include "curvebound/kernels.hpp"
#include "curvebound/quadrature.hpp"

namespace curvebound {
namespace {

constexpr int kMaxBisectIters = 200;
constexpr double kRelWidth = 1e-13;

// Bisection on a sign-changing bracket, run until the enclosure reaches
// relative width 1e-13 (or one ULP).  The bracket is certified: the returned
// enclosure always carries a sign change of f.
template <typename F>
Enclosure bisect(F&& f, double lo, double hi) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, lo};
  if (fhi == 0.0) return {hi, hi};
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::logic_error("bisect: bracket endpoints have equal signs");
  }
  for (int i = 0; i < kMaxBisectIters; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (!(lo < mid && mid < hi)) break;  // one ULP apart
    const double fm = f(mid);
    if (fm == 0.0) return {mid, mid};
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo <= kRelWidth * std::max(1.0, std::abs(mid))) break;
  }
  return {lo, hi};
}

// Point just inside the right edge of phi's domain where phi is guaranteed
// (and verified) negative; retreats by halving if the first offset is not.
double near_domain_limit_negative(double rho, double t) {
  const double limit = phi_domain_limit(rho, t);
  const double width = limit - 1.0;  // = pi^2/(rho t)^2
  double offset = 1e-9 * width;
  for (int i = 0; i < 120; ++i) {
    const double x = limit - offset;
    if (phi(rho, t, x) < 0.0) return x;
    offset *= 0.5;
  }
  throw std::logic_error("roots: profile not negative near its domain limit");
}

double solve_positive_root_enclosed(double rho, double t, Enclosure& out) {
  // phi(rho,t,0) = rho(coth(rho t) - 1) > 0 and phi -> -inf at the limit.
  // Past rho t ~ 19 coth rounds to 1 and the left side evaluates to 0 (up to
  // one rounding unit of either sign): the roots sit below double resolution
  // and the enclosure collapses onto the origin.
  if (!(phi(rho, t, 0.0) > 0.0)) {
    out = {0.0, 0.0};
    return 0.0;
  }
  const double hi = near_domain_limit_negative(rho, t);
  out = bisect([&](double x) { return phi(rho, t, x); }, 0.0, hi);
  return out.midpoint();
}

double solve_negative_root_enclosed(double rho, double t, Enclosure& out) {
  if (!(phi(rho, t, 0.0) > 0.0)) {  // saturated: see above
    out = {0.0, 0.0};
    return 0.0;
  }
  double a = -1.0;
  for (int i = 0; i < 200 && phi(rho, t, a) > 0.0; ++i) a *= 2.0;
  if (phi(rho, t, a) > 0.0) {
    throw std::logic_error("roots: no sign change found toward -inf");
  }
  out = bisect([&](double x) { return phi(rho, t, x); }, a, 0.0);
  return out.midpoint();
}

double solve_sole_root_enclosed(double rho, double t, Enclosure& out) {
  // phi(rho,t,1) = 1/t - rho/2 > 0 for rho < 0; negative near the limit.
  const double hi = near_domain_limit_negative(rho, t);
  out = bisect([&](double x) { return phi(rho, t, x); }, 1.0, hi);
  return out.midpoint();
}

}  // namespace

ProfileRootEnclosures find_root_enclosures(double rho, double t) {
  if (rho == 0.0) {
    throw std::invalid_argument("find_root_enclosures: requires rho != 0 (the profile 1/t has no roots)");
  }
  if (!(t > 0.0)) throw std::domain_error("find_root_enclosures: requires t > 0");
  ProfileRootEnclosures enc;
  enc.rho = rho;
  enc.t = t;
  if (rho > 0.0) {
    Enclosure neg;
    Enclosure pos;
    solve_negative_root_enclosed(rho, t, neg);
    solve_positive_root_enclosed(rho, t, pos);
    enc.negative_root = neg;
    enc.positive_root = pos;
  } else {
    Enclosure sole;
    solve_sole_root_enclosed(rho, t, sole);
    enc.sole_root = sole;
  }
  return enc;
}

ProfileRoots find_roots(double rho, double t) {
  const ProfileRootEnclosures enc = find_root_enclosures(rho, t);
  ProfileRoots roots;
  roots.rho = rho;
  roots.t = t;
  if (enc.negative_root) roots.negative_root = enc.negative_root->midpoint();
  if (enc.positive_root) roots.positive_root = enc.positive_root->midpoint();
  if (enc.sole_root) roots.sole_root = enc.sole_root->midpoint();
  return roots;
}

RootEstimateBrackets root_estimate_brackets(double rho, double t) {
  if (!(rho > 0.0)) throw std::invalid_argument("root_estimate_brackets: requires rho > 0");
  if (!(t > 0.0)) throw std::domain_error("root_estimate_brackets: requires t > 0");
  const double e1 = std::exp(-rho * t);
  const double e2 = std::exp(-2.0 * rho * t);
  RootEstimateBrackets br;
  br.negative_root = {-4.0 * e1 - 4.0 * e2, -4.0 * e1 + 8.0 * rho * t * e2};
  br.negative_valid = rho * t >= 0.5;
  br.positive_root = {4.0 * e1 - 4.0 * e2, 4.0 * e1 + 8.0 * rho * t * e2};
  br.positive_valid = rho * t >= 6.0;
  return br;
}

SmallTimeRootEstimates small_time_root_estimates(double rho, double t) {
  if (!(rho > 0.0)) throw std::invalid_argument("small_time_root_estimates: requires rho > 0");
  if (!(t > 0.0)) throw std::domain_error("small_time_root_estimates: requires t > 0");
  const double rt = rho * t;
  return {-2.0 / rt, kPiSquared / (rt * rt) - 4.0 / rt};
}

bool positive_root_at_most_one(double rho, double t) {
  if (!(rho > 0.0)) throw std::invalid_argument("positive_root_at_most_one: requires rho > 0");
  if (!(t > 0.0)) throw std::domain_error("positive_root_at_most_one: requires t > 0");
  // Sign certificate: the profile is positive exactly between its roots and
  // positive at 0, so the positive root is <= 1 iff phi(rho,t,1) <= 0.
  return 1.0 / t - 0.5 * rho <= 0.0;
}

SoleRootBracket sole_root_bracket(double rho, double t) {
  if (!(rho < 0.0)) throw std::invalid_argument("sole_root_bracket: requires rho < 0");
  if (!(t >= 2.0 / std::abs(rho))) {
    throw std::domain_error("sole_root_bracket: requires t >= 2/|rho|");
  }
  const double rt = rho * t;
  const double pw = kPiSquared / (rt * rt);
  SoleRootBracket br;
  br.lo_literal = 1.0 + pw * (1.0 - 2.0 / rt);
  br.lo_abs_rho = 1.0 + pw * (1.0 - 2.0 / std::abs(rt));
  br.lo_repaired = 1.0 + pw * (1.0 - 4.0 / std::abs(rt));
  br.hi = 1.0 + pw;
  return br;
}

UltracontractiveEnvelope ultracontractive_envelope(const CurvatureDimension& cd, double t) {
  const double rho = cd.rho;
  if (!(rho > 0.0)) throw std::invalid_argument("ultracontractive_envelope: requires rho > 0");
  if (!(t > 0.0)) throw std::domain_error("ultracontractive_envelope: requires t > 0");

  // Past rho u = 8 the exponential root brackets are valid (they hold from
  // rho u = 6) and tight to a factor 1 + O(u e^{-u rho}), so the remaining
  // integrals are taken in closed form, rounded in the conservative direction
  // for each side of the envelope.  The numeric part must stop well before
  // rho u ~ 19, where the profile's double evaluation vanishes at the origin
  // and the computed roots degrade into rounding noise.
  const double u0 = std::max(t, 8.0 / rho);
  const double e1 = std::exp(-rho * u0);
  const double e2 = std::exp(-2.0 * rho * u0);

  Enclosure scratch;
  const double integral_pos = adaptive_simpson(
      [&](double u) { return solve_positive_root_enclosed(rho, u, scratch); }, t, u0, 1e-11);
  const double integral_neg = adaptive_simpson(
      [&](double u) { return solve_negative_root_enclosed(rho, u, scratch); }, t, u0, 1e-11);

  // Overestimates the positive-root tail (integral of the bracket's upper
  // end), which can only lower the lower bound; underestimates the
  // negative-root tail (bracket's lower end), which can only raise the upper.
  const double tail_pos = (4.0 / rho) * e1 + 4.0 * u0 * e2 + (2.0 / rho) * e2;
  const double tail_neg = -((4.0 / rho) * e1 + (2.0 / rho) * e2);

  const double scale = 0.25 * cd.n * rho;
  UltracontractiveEnvelope env;
  env.lower = std::exp(-scale * (integral_pos + tail_pos));
  env.upper = std::exp(-scale * (integral_neg + tail_neg));
  env.t = t;
  return env;
}

double gradient_decay_bound(const CurvatureDimension& cd, double t) {
  if (!(cd.rho > 0.0)) throw std::invalid_argument("gradient_decay_bound: requires rho > 0");
  if (!(cd.rho * t >= 6.0)) {
    throw std::domain_error("gradient_decay_bound: requires rho*t >= 6");
  }
  return 1.5 * cd.n * cd.rho * std::exp(2.0 - 2.0 * cd.rho * t);
}

}  // namespace curvebound
