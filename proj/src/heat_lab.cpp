#include "curvebound/heat_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "curvebound/kernels.hpp"
#include "curvebound/psi.hpp"
#include "curvebound/roots.hpp"

namespace curvebound {
namespace {

constexpr double kDivisionGuard = 1e-300;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

// 5-point Gauss-Legendre rule on [-1, 1].
constexpr double kGLNode[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                               0.5384693101056831, 0.9061798459386640};
constexpr double kGLWeight[5] = {0.23692688505618909, 0.47862867049936647,
                                 0.5688888888888889, 0.47862867049936647,
                                 0.23692688505618909};

double cell_mass(const ModelSpace& space, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int k = 0; k < 5; ++k) {
    acc += kGLWeight[k] * space.volume_weight(mid + half * kGLNode[k]);
  }
  return acc * half;
}

void require_size(const RadialGrid& grid, const GridFunction& f, const char* who) {
  if (static_cast<int>(f.values.size()) != grid.N + 1) {
    throw std::invalid_argument(std::string(who) + ": data size does not match the grid");
  }
}

void require_finite(const GridFunction& f, const char* who) {
  for (double v : f.values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(std::string(who) + ": data must be finite");
    }
  }
}

// Node update coefficients of the weighted diffusion A:
//   (A u)_i = c_i (u_{i+1} - u_i) - a_i (u_i - u_{i-1}),
// a_i = w_{i-1/2} / (h V_i), c_i = w_{i+1/2} / (h V_i), a_0 = c_N = 0.
struct DiffusionStencil {
  std::vector<double> a;
  std::vector<double> c;
};

DiffusionStencil make_stencil(const ModelSpace& space, const RadialGrid& grid) {
  const int N = grid.N;
  const double h = grid.h();
  const std::vector<double> mass = node_masses(space, grid);
  std::vector<double> face(N);  // w at (i + 1/2) h, i = 0..N-1
  for (int i = 0; i < N; ++i) face[i] = space.volume_weight((i + 0.5) * h);
  DiffusionStencil st;
  st.a.assign(N + 1, 0.0);
  st.c.assign(N + 1, 0.0);
  for (int i = 0; i <= N; ++i) {
    if (i > 0) st.a[i] = face[i - 1] / (h * mass[i]);
    if (i < N) st.c[i] = face[i] / (h * mass[i]);
  }
  return st;
}

// One Crank-Nicolson step of size dt: (I - dt/2 A) u_next = (I + dt/2 A) u.
// The left matrix is strictly diagonally dominant, so the Thomas sweep is
// stable without pivoting.
void crank_nicolson_step(const DiffusionStencil& st, double dt, std::vector<double>& u,
                         std::vector<double>& rhs, std::vector<double>& diag,
                         std::vector<double>& work) {
  const int N = static_cast<int>(u.size()) - 1;
  const double half = 0.5 * dt;
  for (int i = 0; i <= N; ++i) {
    double flow = 0.0;
    if (i < N) flow += st.c[i] * (u[i + 1] - u[i]);
    if (i > 0) flow -= st.a[i] * (u[i] - u[i - 1]);
    rhs[i] = u[i] + half * flow;
    diag[i] = 1.0 + half * (st.a[i] + st.c[i]);
  }
  // Thomas forward sweep: eliminate the subdiagonal (-half * a_i).
  for (int i = 1; i <= N; ++i) {
    const double m = -half * st.a[i] / diag[i - 1];
    diag[i] -= m * (-half * st.c[i - 1]);
    rhs[i] -= m * rhs[i - 1];
  }
  work[N] = rhs[N] / diag[N];
  for (int i = N - 1; i >= 0; --i) {
    work[i] = (rhs[i] - (-half * st.c[i]) * work[i + 1]) / diag[i];
  }
  u.swap(work);
}

}  // namespace

ModelSpace::ModelSpace(SpaceKind kind_, int n_, double kappa_)
    : kind(kind_), n(n_), kappa(kappa_) {
  if (n < 1) throw std::invalid_argument("model space: dimension must be >= 1");
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw std::invalid_argument("model space: curvature scale must be positive and finite");
  }
}

CurvatureDimension ModelSpace::cd() const {
  const double nd = static_cast<double>(n);
  switch (kind) {
    case SpaceKind::Euclidean:
      return CurvatureDimension(0.0, nd);
    case SpaceKind::Sphere:
      return CurvatureDimension((nd - 1.0) * kappa * kappa, nd);
    case SpaceKind::Hyperbolic:
      return CurvatureDimension(-(nd - 1.0) * kappa * kappa, nd);
  }
  throw std::logic_error("model space: unknown kind");
}

double ModelSpace::volume_weight(double r) const {
  switch (kind) {
    case SpaceKind::Euclidean:
      return std::pow(r, n - 1);
    case SpaceKind::Sphere:
      return std::pow(std::sin(kappa * r) / kappa, n - 1);
    case SpaceKind::Hyperbolic:
      return std::pow(std::sinh(kappa * r) / kappa, n - 1);
  }
  throw std::logic_error("model space: unknown kind");
}

double ModelSpace::drift(double r) const {
  if (!(r > 0.0) || !(r < max_radius())) {
    throw std::domain_error("model space: drift needs 0 < r < max radius");
  }
  const double m = n - 1.0;
  switch (kind) {
    case SpaceKind::Euclidean:
      return m / r;
    case SpaceKind::Sphere:
      return m * kappa * std::cos(kappa * r) / std::sin(kappa * r);
    case SpaceKind::Hyperbolic:
      return m * kappa / std::tanh(kappa * r);
  }
  throw std::logic_error("model space: unknown kind");
}

double ModelSpace::max_radius() const {
  if (kind == SpaceKind::Sphere) return kPi / kappa;
  return std::numeric_limits<double>::infinity();
}

RadialGrid::RadialGrid(double radius, int cells) : R(radius), N(cells) {
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw std::invalid_argument("radial grid: radius must be positive and finite");
  }
  if (N < 100) throw std::invalid_argument("radial grid: need at least 100 cells");
}

std::vector<double> node_masses(const ModelSpace& space, const RadialGrid& grid) {
  if (grid.R > space.max_radius() * (1.0 + 1e-12)) {
    throw std::invalid_argument("node_masses: grid extends past the antipode");
  }
  const int N = grid.N;
  const double h = grid.h();
  std::vector<double> mass(N + 1);
  mass[0] = cell_mass(space, 0.0, 0.5 * h);
  for (int i = 1; i < N; ++i) {
    mass[i] = cell_mass(space, (i - 0.5) * h, (i + 0.5) * h);
  }
  mass[N] = cell_mass(space, grid.R - 0.5 * h, grid.R);
  return mass;
}

double weighted_mass(const ModelSpace& space, const RadialGrid& grid,
                     const GridFunction& f) {
  require_size(grid, f, "weighted_mass");
  const std::vector<double> mass = node_masses(space, grid);
  double acc = 0.0;
  for (int i = 0; i <= grid.N; ++i) acc += mass[i] * f.values[i];
  return acc;
}

double weighted_mean(const ModelSpace& space, const RadialGrid& grid,
                     const GridFunction& f) {
  require_size(grid, f, "weighted_mean");
  const std::vector<double> mass = node_masses(space, grid);
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i <= grid.N; ++i) {
    num += mass[i] * f.values[i];
    den += mass[i];
  }
  return num / den;
}

GridFunction evolve(const ModelSpace& space, const RadialGrid& grid,
                    const GridFunction& f0, double t, double dt) {
  require_size(grid, f0, "evolve");
  require_finite(f0, "evolve");
  if (!(t > 0.0)) throw std::invalid_argument("evolve: need t > 0");
  if (!(dt > 0.0) || dt > grid.h() * (1.0 + 1e-12)) {
    throw std::invalid_argument("evolve: need 0 < dt <= h");
  }
  if (f0.positive) {
    for (double v : f0.values) {
      if (!(v > 0.0)) throw std::invalid_argument("evolve: positive data expected");
    }
  }

  const DiffusionStencil st = make_stencil(space, grid);
  GridFunction out = f0;
  std::vector<double> rhs(grid.N + 1), diag(grid.N + 1), work(grid.N + 1);

  const long full_steps = static_cast<long>(std::floor(t / dt + 1e-12));
  const double remainder = t - static_cast<double>(full_steps) * dt;
  long done = 0;
  for (long k = 0; k < full_steps; ++k) {
    crank_nicolson_step(st, dt, out.values, rhs, diag, work);
    ++done;
    // Instability surfaces as a non-finite entry; stop immediately.
    for (double v : out.values) {
      if (!std::isfinite(v)) {
        throw std::runtime_error("evolve: instability detected at step " +
                                 std::to_string(done));
      }
    }
  }
  if (remainder > 1e-9 * dt) {
    crank_nicolson_step(st, remainder, out.values, rhs, diag, work);
    for (double v : out.values) {
      if (!std::isfinite(v)) {
        throw std::runtime_error("evolve: instability detected at the final step");
      }
    }
  }
  return out;
}

GridFunction gradient_squared(const RadialGrid& grid, const GridFunction& f) {
  require_size(grid, f, "gradient_squared");
  const int N = grid.N;
  const double h = grid.h();
  GridFunction out;
  out.values.assign(N + 1, 0.0);
  for (int i = 1; i < N; ++i) {
    const double d = (f.values[i + 1] - f.values[i - 1]) / (2.0 * h);
    out.values[i] = d * d;
  }
  // Reflecting extension: zero slope at r = 0 and r = R.
  out.values[0] = 0.0;
  out.values[N] = 0.0;
  return out;
}

StateFields compute_x_g(const ModelSpace& space, const RadialGrid& grid,
                        const GridFunction& ptf) {
  require_size(grid, ptf, "compute_x_g");
  const int N = grid.N;
  const double h = grid.h();
  const CurvatureDimension cd = space.cd();
  StateFields out;
  out.l_ratio.values.assign(N + 1, kNaN);
  out.gamma_ratio.values.assign(N + 1, kNaN);
  out.x.values.assign(N + 1, kNaN);
  for (int i = 1; i < N; ++i) {
    const double u = ptf.values[i];
    if (!(u >= kDivisionGuard)) {
      throw std::runtime_error("compute_x_g: semigroup value below the division guard");
    }
    const double up = ptf.values[i + 1];
    const double um = ptf.values[i - 1];
    const double first = (up - um) / (2.0 * h);
    const double second = (up - 2.0 * u + um) / (h * h);
    const double l = (second + space.drift(grid.node(i)) * first) / u;
    out.l_ratio.values[i] = l;
    out.gamma_ratio.values[i] = (first / u) * (first / u);
    if (cd.rho != 0.0) {
      out.x.values[i] = 4.0 * l / (cd.n * cd.rho);
    }
  }
  return out;
}

MarginReport check_liyau(const ModelSpace& space, const RadialGrid& grid,
                         const GridFunction& ptf, double t, double tol) {
  if (!(t > 0.0)) throw std::invalid_argument("check_liyau: need t > 0");
  const CurvatureDimension cd = space.cd();
  const StateFields fields = compute_x_g(space, grid, ptf);
  double best = std::numeric_limits<double>::infinity();
  long best_node = -1;
  const double limit =
      cd.rho != 0.0 ? phi_domain_limit(cd.rho, t) : std::numeric_limits<double>::infinity();
  for (int i = 1; i < grid.N; ++i) {
    double m;
    if (cd.rho == 0.0) {
      m = fields.l_ratio.values[i] + 0.5 * cd.n / t - fields.gamma_ratio.values[i];
    } else {
      const double xi = fields.x.values[i];
      if (xi >= limit) {
        if (xi - limit > tol) {
          throw std::domain_error(
              "check_liyau: state left the admissible domain beyond tolerance");
        }
        continue;  // within tolerance: the x_domain report carries the violation
      }
      m = 0.5 * cd.n * phi(cd.rho, t, xi) - fields.gamma_ratio.values[i];
    }
    if (m < best) {
      best = m;
      best_node = i;
    }
  }
  return MarginReport{"li_yau", best, best_node, t, tol, best >= -tol};
}

MarginReport check_x_domain(const ModelSpace& space, const RadialGrid& grid,
                            const GridFunction& ptf, double t, double tol) {
  const CurvatureDimension cd = space.cd();
  if (cd.rho == 0.0) {
    throw std::invalid_argument("check_x_domain: flat space has no domain edge");
  }
  if (!(t > 0.0)) throw std::invalid_argument("check_x_domain: need t > 0");
  const StateFields fields = compute_x_g(space, grid, ptf);
  const double limit = phi_domain_limit(cd.rho, t);
  double best = std::numeric_limits<double>::infinity();
  long best_node = -1;
  for (int i = 1; i < grid.N; ++i) {
    const double m = limit - fields.x.values[i];
    if (m < best) {
      best = m;
      best_node = i;
    }
  }
  return MarginReport{"x_domain", best, best_node, t, tol, best >= -tol};
}

std::pair<MarginReport, MarginReport> check_local_logsob(const ModelSpace& space,
                                                         const RadialGrid& grid,
                                                         const GridFunction& f0, double t,
                                                         double dt, double tol) {
  require_size(grid, f0, "check_local_logsob");
  for (double v : f0.values) {
    if (!(v > 0.0)) {
      throw std::invalid_argument("check_local_logsob: initial data must be positive");
    }
  }
  const CurvatureDimension cd = space.cd();
  const int N = grid.N;

  GridFunction flogf;
  flogf.values.resize(N + 1);
  for (int i = 0; i <= N; ++i) {
    flogf.values[i] = f0.values[i] * std::log(f0.values[i]);
  }
  const GridFunction grad2 = gradient_squared(grid, f0);
  GridFunction carre;
  carre.values.resize(N + 1);
  for (int i = 0; i <= N; ++i) carre.values[i] = grad2.values[i] / f0.values[i];

  GridFunction base = f0;
  base.positive = true;
  const GridFunction p = evolve(space, grid, base, t, dt);
  const GridFunction w = evolve(space, grid, flogf, t, dt);
  const GridFunction q = evolve(space, grid, carre, t, dt);
  const StateFields fields = compute_x_g(space, grid, p);

  const double n = cd.n;
  const double rho = cd.rho;
  const double limit =
      rho != 0.0 ? phi_domain_limit(rho, t) : std::numeric_limits<double>::infinity();
  double best1 = std::numeric_limits<double>::infinity();
  double best2 = std::numeric_limits<double>::infinity();
  long node1 = -1;
  long node2 = -1;
  for (int i = 1; i < N; ++i) {
    const double pi = p.values[i];
    if (!(pi >= kDivisionGuard)) {
      throw std::runtime_error("check_local_logsob: semigroup value below the division guard");
    }
    const double ent_over_p = (w.values[i] - pi * std::log(pi)) / pi;
    const double q_over_p = q.values[i] / pi;
    const double g = fields.gamma_ratio.values[i];
    double m1;
    double m2;
    if (rho == 0.0) {
      const double l = fields.l_ratio.values[i];
      m1 = 1.0 + (2.0 * t / n) * (l - g) - std::exp((2.0 / n) * (t * l - ent_over_p));
      m2 = 1.0 + (2.0 * t / n) * (q_over_p - l) -
           std::exp((2.0 / n) * (ent_over_p - t * l));
    } else {
      const double xi = fields.x.values[i];
      if (xi >= limit) {
        if (xi - limit > tol) {
          throw std::domain_error(
              "check_local_logsob: state left the admissible domain beyond tolerance");
        }
        continue;
      }
      const double wk = rho * rho * t * t * (1.0 - xi);
      const double pref = t * sinhc_kernel(wk);
      m1 = pref * (phi(rho, t, xi) - (2.0 / n) * g) -
           std::exp(-(2.0 / n) * ent_over_p + 0.5 * t * rho * xi - rho * t);
      m2 = pref * (phi_tilde(rho, t, xi) + (2.0 / n) * q_over_p) -
           std::exp((2.0 / n) * ent_over_p - 0.5 * t * rho * xi + rho * t);
    }
    if (m1 < best1) {
      best1 = m1;
      node1 = i;
    }
    if (m2 < best2) {
      best2 = m2;
      node2 = i;
    }
  }
  return {MarginReport{"logsob_inverse", best1, node1, t, tol, best1 >= -tol},
          MarginReport{"logsob", best2, node2, t, tol, best2 >= -tol}};
}

MarginReport check_harnack(const ModelSpace& space, const RadialGrid& grid,
                           const GridFunction& f0, double s, double t, double dt,
                           const std::vector<std::pair<int, int>>& node_pairs,
                           double tol) {
  require_size(grid, f0, "check_harnack");
  if (node_pairs.empty()) {
    throw std::invalid_argument("check_harnack: need at least one node pair");
  }
  for (const auto& [i, j] : node_pairs) {
    if (i < 0 || i > grid.N || j < 0 || j > grid.N) {
      throw std::invalid_argument("check_harnack: node pair out of range");
    }
  }
  const CurvatureDimension cd = space.cd();
  const GridFunction us = evolve(space, grid, f0, s, dt);
  const GridFunction ut = evolve(space, grid, f0, t, dt);

  std::map<double, double> exponent_by_distance;
  double best = std::numeric_limits<double>::infinity();
  long best_node = -1;
  for (const auto& [i, j] : node_pairs) {
    const double d = std::abs(grid.node(i) - grid.node(j));
    auto it = exponent_by_distance.find(d);
    if (it == exponent_by_distance.end()) {
      const double e = harnack_exponent(cd, HarnackQuery{s, t, d}).value;
      it = exponent_by_distance.emplace(d, e).first;
    }
    const double a = us.values[i];
    const double b = ut.values[j];
    if (!(a >= kDivisionGuard) || !(b >= kDivisionGuard)) {
      throw std::runtime_error("check_harnack: semigroup value below the division guard");
    }
    const double m = std::log(b) + it->second - std::log(a);
    if (m < best) {
      best = m;
      best_node = i;
    }
  }
  return MarginReport{"harnack", best, best_node, t, tol, best >= -tol};
}

MarginReport check_ultracontractive(const ModelSpace& space, const RadialGrid& grid,
                                    const GridFunction& f0,
                                    const std::vector<double>& times, double dt,
                                    double tol) {
  require_size(grid, f0, "check_ultracontractive");
  const CurvatureDimension cd = space.cd();
  if (!(cd.rho > 0.0)) {
    throw std::invalid_argument("check_ultracontractive: needs positive curvature");
  }
  if (times.empty()) {
    throw std::invalid_argument("check_ultracontractive: need at least one time");
  }
  std::vector<double> ts = times;
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  if (!(ts.front() > 0.0)) {
    throw std::invalid_argument("check_ultracontractive: times must be positive");
  }
  const double mean = weighted_mean(space, grid, f0);
  if (!(mean > 0.0)) {
    throw std::invalid_argument("check_ultracontractive: data must have positive mean");
  }

  double best = std::numeric_limits<double>::infinity();
  long best_node = -1;
  double best_time = ts.front();
  GridFunction u = f0;
  double reached = 0.0;
  for (double tk : ts) {
    u = evolve(space, grid, u, tk - reached, dt);
    reached = tk;
    const UltracontractiveEnvelope env = ultracontractive_envelope(cd, tk);
    for (int i = 0; i <= grid.N; ++i) {
      const double ratio = u.values[i] / mean;
      const double m = std::min(env.upper - ratio, ratio - env.lower);
      if (m < best) {
        best = m;
        best_node = i;
        best_time = tk;
      }
    }
  }
  return MarginReport{"ultra_envelope", best, best_node, best_time, tol, best >= -tol};
}

MarginReport check_gradient_decay(const ModelSpace& space, const RadialGrid& grid,
                                  const GridFunction& f0,
                                  const std::vector<double>& times, double dt,
                                  double tol) {
  require_size(grid, f0, "check_gradient_decay");
  const CurvatureDimension cd = space.cd();
  if (times.empty()) {
    throw std::invalid_argument("check_gradient_decay: need at least one time");
  }
  std::vector<double> ts = times;
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  double best = std::numeric_limits<double>::infinity();
  long best_node = -1;
  double best_time = ts.front();
  GridFunction u = f0;
  double reached = 0.0;
  for (double tk : ts) {
    u = evolve(space, grid, u, tk - reached, dt);
    reached = tk;
    const double bound = gradient_decay_bound(cd, tk);  // validates rho tk >= 6
    const StateFields fields = compute_x_g(space, grid, u);
    for (int i = 1; i < grid.N; ++i) {
      const double m = bound - fields.gamma_ratio.values[i];
      if (m < best) {
        best = m;
        best_node = i;
        best_time = tk;
      }
    }
  }
  return MarginReport{"gradient_decay", best, best_node, best_time, tol, best >= -tol};
}

}  // namespace curvebound
