#pragma once

// Classical gradient bounds (Davies, Yau, Bakry-Qian, Hamilton, Li-Xu), the
// linearized family tangent to the concave profile, and dominance sweeps
// certifying that the profile bound implies every one of them.
//
// All negative-curvature comparisons run in the dimensionless variables
//   K = -rho > 0,   X = 4 L P_t f / (n rho P_t f),   G = 4 Gamma(P_t f) / (n K (P_t f)^2),
//   r = 1/(K t),    s = K t,
// in which n cancels from every dominance check.  The profile bound reads
// G <= g_new(X) = (2/K) phi(rho, t, X), and each competitor is an upper
// envelope G <= g_comp(X); dominance means g_new <= g_comp on the admissible
// X range (where g_new >= 0, i.e. X up to the profile's sole root).

#include <vector>

#include "curvebound/types.hpp"

namespace curvebound {

// Dimensionless state of a positive solution at one space-time point.
struct NormalizedState {
  double x = 0.0;  // X
  double g = 0.0;  // G >= 0
  double r = 0.0;  // 1/(K t)
  double s = 0.0;  // K t
};

NormalizedState make_normalized_state(double K, double t, double x, double g);

// A linear bound Gamma(P_t f)/(P_t f)^2 <= a * (L P_t f / P_t f) + (n/2) * b.
struct LinearBound {
  double a = 0.0;
  double b = 0.0;
};

// Tangent line to the profile at x0 = 1 - (alpha/rho)^2 (hyperbolic side,
// alpha >= 0; alpha = 0 is the tangent at x0 = 1, via the kernel series).
LinearBound linearized_bound_hyperbolic(double rho, double t, double alpha);

// Tangent line at x0 = 1 + (beta/rho)^2 (trigonometric side, 0 < beta < pi/t).
LinearBound linearized_bound_trigonometric(double rho, double t, double beta);

// Flat-case bound on -L log P_t f: returns v + n/(2t) for v = L P_t f/P_t f.
double bound_classical_liyau(double n, double t, double v);

// Competitor membership tests, exact (no tolerance).  Davies requires
// alpha > 1; Yau and Li-Xu are stated in (Gamma, L, P) variables and
// converted internally from the normalized state.
bool satisfies_davies(const NormalizedState& ns, double alpha);
bool satisfies_yau(const NormalizedState& ns, double n, double K, double t);
bool satisfies_bakry_qian(const NormalizedState& ns);
bool satisfies_hamilton(const NormalizedState& ns);
bool satisfies_li_xu(const NormalizedState& ns, double n, double K, double t);

// log of the Li-Xu comparison factor
//   (g(2Kt)/g(2Ks))^{n/4} exp[ d^2/(4(t-s)) (1 + (t coth Kt - s coth Ks)/(t-s)) ],
// g(x) = e^x - 1 - x, series-stabilized for small and very large Kt.
double li_xu_harnack_exponent(double n, double K, double s, double t, double d);

// Minimum of g_comp - g_new over a grid_size-point X grid spanning
// [-50, sole root] for each competitor (Davies at alpha in {1.1, 2, 10},
// Bakry-Qian, Hamilton, Li-Xu, Yau).  Requires rho < 0.  All minima are
// expected >= -1e-10; the Yau row is a numerical observation on the same
// footing, not a claim with a written proof behind it.
std::vector<MarginReport> dominance_report(const CurvatureDimension& cd, double t, int grid_size);

}  // namespace curvebound
