#pragma once

// Roots of the profile x -> phi(rho, t, x) and the certificates built on them.
//
// Positive curvature: phi is positive exactly between two simple roots
// negative_root < 0 < positive_root, both sliding toward 0 exponentially fast
// in t.  Integrating them in time yields a two-sided envelope for
// P_t f / \int f dmu.  Negative curvature: phi has a single root in
// (1, domain limit) and is positive to its left.
//
// Every root is produced together with a certified bisection enclosure, so
// downstream comparisons ("the root lies inside the printed bracket") can be
// made exact rather than tolerance-based.

#include <optional>

#include "curvebound/types.hpp"

namespace curvebound {

struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;
  [[nodiscard]] double midpoint() const { return 0.5 * (lo + hi); }
  [[nodiscard]] double width() const { return hi - lo; }
  [[nodiscard]] bool contains(double v) const { return lo <= v && v <= hi; }
};

// Roots of phi(rho, t, .): two for rho > 0, one for rho < 0.
struct ProfileRoots {
  std::optional<double> negative_root;  // rho > 0
  std::optional<double> positive_root;  // rho > 0
  std::optional<double> sole_root;      // rho < 0, lies in (1, domain limit)
  double rho = 0.0;
  double t = 0.0;
};

struct ProfileRootEnclosures {
  std::optional<Enclosure> negative_root;
  std::optional<Enclosure> positive_root;
  std::optional<Enclosure> sole_root;
  double rho = 0.0;
  double t = 0.0;
};

// Certified bisection enclosures of all roots, to relative width 1e-13.
// An enclosure collapses to a single point where the profile evaluates to
// exactly 0 in double.  Past rho t ~ 19 coth(rho t) rounds to 1 and the
// profile's evaluation at the origin rounds to 0: the true roots
// ~ +/-4 e^{-rho t} sit below the evaluation's resolution and both
// enclosures degenerate to {0, 0}; the closed-form estimate brackets below
// stay sharp there.
// Throws std::invalid_argument for rho = 0 (the profile is the constant 1/t).
ProfileRootEnclosures find_root_enclosures(double rho, double t);

// Midpoints of find_root_enclosures.  Each residual |phi(root)| is bounded by
// the profile's local slope times the enclosure width (not by an absolute
// constant: the sole root scales like 1 + pi^2/(rho t)^2, so its enclosure,
// and with it the residual, is only relatively small).
ProfileRoots find_roots(double rho, double t);

// Closed-form exponential brackets for the two positive-curvature roots:
//   -4e^{-rho t} - 4e^{-2 rho t} <= negative_root <= -4e^{-rho t} + 8 rho t e^{-2 rho t}
//    4e^{-rho t} - 4e^{-2 rho t} <= positive_root <= 4e^{-rho t} + 8 rho t e^{-2 rho t}
// valid for rho t >= 1/2 (negative root) and rho t >= 6 (positive root).
struct RootEstimateBrackets {
  Enclosure negative_root;
  bool negative_valid = false;  // rho t >= 1/2
  Enclosure positive_root;
  bool positive_valid = false;  // rho t >= 6
};
RootEstimateBrackets root_estimate_brackets(double rho, double t);

// Small-time leading terms: negative_root ~ -2/(rho t) and
// positive_root ~ pi^2/(rho t)^2 - 4/(rho t), each with an O(1) residual.
struct SmallTimeRootEstimates {
  double negative_root = 0.0;
  double positive_root = 0.0;
};
SmallTimeRootEstimates small_time_root_estimates(double rho, double t);

// Whether the positive root sits at or below 1.  Decided by the sign of
// phi(rho, t, 1) = 1/t - rho/2, so the answer is exact (no root-finding):
// true precisely when rho t >= 2.  rho > 0 required.
bool positive_root_at_most_one(double rho, double t);

// Negative curvature: printed asymptotic bracket for the sole root,
//   1 + pi^2/(rho t)^2 * (1 - 2/(rho t)) <= root <= 1 + pi^2/(rho t)^2,
// for t >= 2/|rho|.  Taken literally with rho < 0 the lower bound exceeds the
// upper one, and with |rho| substituted it still overtakes the root at
// moderate t, so both readings are recorded alongside a repaired lower bound
// using the factor (1 - 4/(|rho| t)) — the leading correction of the root's
// actual expansion 1 + pi^2/(rho t)^2 (1 - 4/(|rho|t) + O(t^{-2})).  Tests
// check which readings actually enclose the bisection root.
struct SoleRootBracket {
  double lo_literal = 0.0;   // signed-rho reading (empty bracket: lo > hi)
  double lo_abs_rho = 0.0;   // |rho| reading (fails as a lower bound for larger t)
  double lo_repaired = 0.0;  // 1 + pi^2/(rho t)^2 (1 - 4/(|rho| t))
  double hi = 0.0;           // the domain limit, always valid
};
SoleRootBracket sole_root_bracket(double rho, double t);

// Two-sided envelope for the normalized semigroup value P_t f / \int f dmu
// under positive curvature: integrating the positive root of the profile
// over [t, inf) gives the lower bound exp(-(n rho/4) I_+), the negative root
// the upper bound exp(-(n rho/4) I_-).  Beyond T* = max(t, 6/rho) + 40/rho
// the integrands are replaced by their exponential brackets integrated in
// closed form, rounded in the conservative direction for each side.
struct UltracontractiveEnvelope {
  double lower = 0.0;  // <= 1
  double upper = 0.0;  // >= 1
  double t = 0.0;
};
UltracontractiveEnvelope ultracontractive_envelope(const CurvatureDimension& cd, double t);

// Upper bound (3 n rho / 2) e^2 e^{-2 rho t} for the squared log-gradient
// of the semigroup, valid under positive curvature for rho t >= 6.
double gradient_decay_bound(const CurvatureDimension& cd, double t);

}  // namespace curvebound
