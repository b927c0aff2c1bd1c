#pragma once
// Radial heat-flow laboratory on the three constant-curvature model spaces.
//
// The flow dt u = L u = u'' + c(r) u' is the radial reduction of the
// Laplace-Beltrami heat equation for rotationally symmetric data, with drift
//   c(r) = (n-1)/r                 flat space,
//   c(r) = (n-1) k cot(k r)        sphere of scale k      (rho = (n-1)k^2),
//   c(r) = (n-1) k coth(k r)       hyperbolic space       (rho = -(n-1)k^2).
// The discretization is a finite-volume scheme against the volume weight
// w(r) (r^{n-1}, (sin kr / k)^{n-1}, (sinh kr / k)^{n-1}): fluxes
// w_{i+1/2} (u_{i+1} - u_i)/h across cell faces, Crank-Nicolson in time.
// Zero-flux boundaries conserve the weighted mass exactly (the flux sum
// telescopes) and encode the symmetry condition at r = 0; at the sphere's
// antipode the weight itself vanishes, so the truncation is exact there.
//
// On the computed semigroup the module checks, with grid-calibrated
// tolerances: the curvature-dimension gradient bound and its domain
// constraint, the two-sided local entropy inequalities, the Harnack
// inequality between space-time points on a common radial geodesic, the
// positive-curvature convergence envelope, and the gradient decay bound.

#include <cstddef>
#include <utility>
#include <vector>

#include "curvebound/types.hpp"

namespace curvebound {

enum class SpaceKind { Euclidean, Sphere, Hyperbolic };

// One of the three simply connected constant-curvature spaces, carrying the
// exact curvature-dimension pair it witnesses.
struct ModelSpace {
  SpaceKind kind = SpaceKind::Euclidean;
  int n = 2;           // dimension (>= 1)
  double kappa = 1.0;  // curvature scale (> 0); unused in the flat case

  ModelSpace() = default;
  ModelSpace(SpaceKind kind_, int n_, double kappa_);

  [[nodiscard]] CurvatureDimension cd() const;
  // Volume element weight w(r) against which mass is measured.
  [[nodiscard]] double volume_weight(double r) const;
  // Radial drift c(r) of L = d_rr + c(r) d_r, valid for 0 < r < max_radius().
  [[nodiscard]] double drift(double r) const;
  // pi/k for the sphere (the antipode), +inf otherwise.
  [[nodiscard]] double max_radius() const;
};

// Uniform node grid r_i = i h, i = 0..N, on [0, R].
struct RadialGrid {
  double R = 1.0;
  int N = 100;

  RadialGrid(double radius, int cells);
  [[nodiscard]] double h() const { return R / N; }
  [[nodiscard]] double node(int i) const { return i * h(); }
};

// Nodal samples of a radial function; `positive` marks data known positive
// (evolution preserves the flag).
struct GridFunction {
  std::vector<double> values;
  bool positive = false;
};

// Weighted node masses V_i = integral of w over the cell owned by node i
// (half cells at the two ends); 5-point Gauss-Legendre per cell.
[[nodiscard]] std::vector<double> node_masses(const ModelSpace& space,
                                              const RadialGrid& grid);

// Total weighted mass  sum V_i f_i  and the weighted mean  mass / sum V_i.
[[nodiscard]] double weighted_mass(const ModelSpace& space, const RadialGrid& grid,
                                   const GridFunction& f);
[[nodiscard]] double weighted_mean(const ModelSpace& space, const RadialGrid& grid,
                                   const GridFunction& f);

// Advance f0 by time t under the radial heat flow (Crank-Nicolson steps of
// size dt <= h, plus one short final step).  Zero-flux at both ends.  Throws
// on non-finite input, on dt out of range, and on detected instability.
[[nodiscard]] GridFunction evolve(const ModelSpace& space, const RadialGrid& grid,
                                  const GridFunction& f0, double t, double dt);

// Squared radial derivative (f')^2 at every node: centered differences
// inside, reflecting extension (zero slope) at both ends.
[[nodiscard]] GridFunction gradient_squared(const RadialGrid& grid,
                                            const GridFunction& f);

// Pointwise ratios of the evolved state at interior nodes (NaN at the two
// boundary nodes): l_ratio = L u / u, gamma_ratio = (u')^2 / u^2, and the
// normalized argument x = (4 / (n rho)) l_ratio (NaN throughout when
// rho = 0).  Centered differences; throws when u drops below 1e-300.
struct StateFields {
  GridFunction l_ratio;
  GridFunction gamma_ratio;
  GridFunction x;
};
[[nodiscard]] StateFields compute_x_g(const ModelSpace& space, const RadialGrid& grid,
                                      const GridFunction& ptf);

// Gradient bound on the evolved state: margin = (n/2) phi(rho, t, x_i) -
// gamma_ratio_i over interior nodes (classical form l + n/(2t) - gamma when
// rho = 0).  Nodes past the admissible domain fail hard beyond `tol`.
[[nodiscard]] MarginReport check_liyau(const ModelSpace& space, const RadialGrid& grid,
                                       const GridFunction& ptf, double t, double tol);

// Domain constraint margin = domain limit - x_i over interior nodes
// (rho != 0 only).
[[nodiscard]] MarginReport check_x_domain(const ModelSpace& space, const RadialGrid& grid,
                                          const GridFunction& ptf, double t, double tol);

// Two-sided local entropy inequalities at time t for initial data f0 > 0:
// evolves f0, f0 log f0, and (f0')^2 / f0, then compares both exponential
// sides against the concave profile with the t*sinhc prefactor.  Returns
// (lower-side report "logsob_inverse", upper-side report "logsob").
[[nodiscard]] std::pair<MarginReport, MarginReport> check_local_logsob(
    const ModelSpace& space, const RadialGrid& grid, const GridFunction& f0,
    double t, double dt, double tol);

// Harnack comparison between times s and t at node pairs (i, j) on the
// common radial geodesic, d = |r_i - r_j|: margin of
// log u_t(r_j) + E(s, t, d) - log u_s(r_i).
[[nodiscard]] MarginReport check_harnack(const ModelSpace& space, const RadialGrid& grid,
                                         const GridFunction& f0, double s, double t,
                                         double dt,
                                         const std::vector<std::pair<int, int>>& node_pairs,
                                         double tol);

// Positive-curvature convergence envelope: at each requested time, every
// nodal ratio u_t / mean(f0) must lie inside the two-sided envelope; margin
// is the smaller of the two gaps.  Requires rho > 0.
[[nodiscard]] MarginReport check_ultracontractive(const ModelSpace& space,
                                                  const RadialGrid& grid,
                                                  const GridFunction& f0,
                                                  const std::vector<double>& times,
                                                  double dt, double tol);

// Long-time gradient decay: margin = bound(t) - (u')^2/u^2 over interior
// nodes at each requested time (each needs rho t >= 6).
[[nodiscard]] MarginReport check_gradient_decay(const ModelSpace& space,
                                                const RadialGrid& grid,
                                                const GridFunction& f0,
                                                const std::vector<double>& times,
                                                double dt, double tol);

}  // namespace curvebound
