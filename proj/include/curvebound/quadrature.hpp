#pragma once

#include <cmath>

namespace curvebound {

namespace detail {

template <typename F>
double simpson(F&& f, double a, double fa, double b, double fb, double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// Classic recursive refinement: the interval is accepted once the two-panel
// estimate agrees with the one-panel estimate to 15x the local tolerance
// (the factor 15 comes from the O(h^4) error cancellation of Simpson pairs).
template <typename F>
double adaptive_simpson_rec(F&& f, double a, double fa, double b, double fb, double m,
                            double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  const double err = left + right - whole;
  if (depth <= 0 || std::abs(err) <= 15.0 * tol) {
    return left + right + err / 15.0;
  }
  return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature of f over [a, b].  The tolerance is relative to
// a coarse estimate of the integral's magnitude, floored at abs_floor so that
// integrals near zero terminate.  max_depth bounds the recursion.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, double rel_tol = 1e-10,
                        double abs_floor = 1e-14, int max_depth = 40) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = detail::simpson(f, a, fa, b, fb, m, fm);
  const double tol = std::max(abs_floor, rel_tol * std::abs(whole));
  return detail::adaptive_simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace curvebound
