// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit 0 iff all
// pass.  Every check is a property of the public API against closed forms,
// independent anchors, or grid-refinement extrapolation; tolerances are
// stated inline next to each criterion.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <exception>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "curvebound/classical.hpp"
#include "curvebound/heat_lab.hpp"
#include "curvebound/kernels.hpp"
#include "curvebound/psi.hpp"
#include "curvebound/roots.hpp"
#include "curvebound/scenario.hpp"
#include "scenario_fixtures.hpp"

namespace {

using namespace curvebound;

int g_failures = 0;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return buf;
}

// |a - b| measured against max(1, |b|): relative at function scale, absolute
// where the value crosses zero.
bool within(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

double scaled_err(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

// ---------------------------------------------------------------------------
// 1. profile anchor at x = 1

bool criterion_phi_at_one(std::string& note) {
  const double rhos[] = {-3.0, -1.5, -0.7, 0.4, 2.0};
  const double ts[] = {0.1, 0.7, 1.0, 3.0};
  double worst = 0.0;
  for (double rho : rhos) {
    for (double t : ts) {
      const double ref = 1.0 / t - 0.5 * rho;
      worst = std::max(worst, scaled_err(phi(rho, t, 1.0), ref));
    }
  }
  note = "worst scaled error " + num(worst);
  return worst <= 1e-14;
}

// ---------------------------------------------------------------------------
// 2. unified kernel vs literal two-branch evaluation across the x = 1 seam

double literal_phi(double rho, double t, double x) {
  const double w = rho * rho * t * t * (1.0 - x);
  double f = 1.0;
  if (w > 0.0) {
    const double y = std::sqrt(w);
    f = y / std::tanh(y);
  } else if (w < 0.0) {
    const double y = std::sqrt(-w);
    f = y * std::cos(y) / std::sin(y);
  }
  return 0.5 * rho * (x - 2.0) + f / t;
}

bool criterion_branch_seam(std::string& note) {
  const double rhos[] = {-2.0, -1.0, 1.0, 2.0};
  const double ts[] = {0.1, 1.0, 10.0};
  double worst = 0.0;
  for (double rho : rhos) {
    for (double t : ts) {
      for (int k = 3; k <= 8; ++k) {
        const double eps = std::pow(10.0, -k);
        for (double x : {1.0 - eps, 1.0 + eps}) {
          worst = std::max(worst, scaled_err(phi(rho, t, x), literal_phi(rho, t, x)));
        }
      }
    }
  }
  note = "worst scaled disagreement " + num(worst);
  return worst <= 1e-10;
}

// ---------------------------------------------------------------------------
// 3. concavity of the profile in x

bool criterion_concavity(std::string& note) {
  const double rhos[] = {-2.0, -1.0, 1.0, 2.0};
  const double ts[] = {0.1, 1.0, 10.0};
  double worst = -1e300;
  for (double rho : rhos) {
    for (double t : ts) {
      const double limit = phi_domain_limit(rho, t);
      const double left = -20.0;
      const double right = limit - 1e-3 * (limit - left);
      const int m = 200;
      const double h = (right - left) / (m - 1);
      std::vector<double> v(m);
      for (int i = 0; i < m; ++i) v[i] = phi(rho, t, left + i * h);
      for (int i = 1; i + 1 < m; ++i) {
        worst = std::max(worst, v[i - 1] + v[i + 1] - 2.0 * v[i]);
      }
    }
  }
  note = "largest second difference " + num(worst);
  return worst <= 1e-12;
}

// ---------------------------------------------------------------------------
// 4. vanishing-curvature limit recovers the classical linear bound

bool criterion_flat_limit(std::string& note) {
  const double rho = 1e-6;
  double worst = 0.0;
  for (double n : {2.0, 4.0}) {
    for (double t : {0.5, 1.0, 2.0}) {
      for (double v : {-1.0, 0.0, 3.0}) {
        const double lhs = 0.5 * n * phi(rho, t, 4.0 * v / (n * rho));
        const double rhs = v + n / (2.0 * t);
        worst = std::max(worst, scaled_err(lhs, rhs));
      }
    }
  }
  note = "worst scaled deviation " + num(worst);
  return worst < 1e-4;
}

// ---------------------------------------------------------------------------
// 5. certified roots inside the printed exponential brackets; xi2 <= 1 at
//    rho t >= 2 (exact sign certificate at the boundary case, where the
//    bisection enclosure straddles the root x = 1 by design)

bool criterion_root_brackets(std::string& note) {
  bool ok = true;
  for (double t : {1.0, 2.0, 6.0, 10.0}) {
    const auto enc = find_root_enclosures(1.0, t);
    const auto br = root_estimate_brackets(1.0, t);
    if (!enc.negative_root || !br.negative_valid ||
        !(br.negative_root.lo <= enc.negative_root->lo &&
          enc.negative_root->hi <= br.negative_root.hi)) {
      ok = false;
      note += "negative root escapes bracket at t=" + num(t) + "; ";
    }
  }
  for (double t : {6.0, 8.0, 12.0}) {
    const auto enc = find_root_enclosures(1.0, t);
    const auto br = root_estimate_brackets(1.0, t);
    if (!enc.positive_root || !br.positive_valid ||
        !(br.positive_root.lo <= enc.positive_root->lo &&
          enc.positive_root->hi <= br.positive_root.hi)) {
      ok = false;
      note += "positive root escapes bracket at t=" + num(t) + "; ";
    }
  }
  if (!positive_root_at_most_one(1.0, 2.0)) {
    ok = false;
    note += "sign certificate false at rho t = 2; ";
  }
  for (double t : {1.0, 1.9}) {
    if (positive_root_at_most_one(1.0, t)) {
      ok = false;
      note += "sign certificate true below rho t = 2; ";
    }
  }
  for (double t : {2.5, 6.0, 8.0, 12.0}) {
    const auto enc = find_root_enclosures(1.0, t);
    if (!positive_root_at_most_one(1.0, t) || !(enc.positive_root->hi <= 1.0)) {
      ok = false;
      note += "xi2 > 1 at t=" + num(t) + "; ";
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 6. Legendre transform: flat closed form, nonnegativity, biconjugacy

bool criterion_legendre(std::string& note) {
  bool ok = true;
  double worst_anchor = 0.0;
  double min_value = 0.0;
  for (double n : {1.0, 2.0, 3.0, 4.0, 5.0}) {
    for (double t : {0.5, 1.0}) {
      for (double y : {-0.3, -2.0}) {
        const auto lr = legendre_transform(CurvatureDimension(0.0, n), t, y);
        const double ref = -n * y / (2.0 * t) - 1.0 / (4.0 * y);
        worst_anchor = std::max(worst_anchor, scaled_err(lr.value, ref));
        min_value = std::min(min_value, lr.value);
      }
    }
  }
  if (worst_anchor > 1e-12) {
    ok = false;
    note += "flat anchor error " + num(worst_anchor) + "; ";
  }

  double worst_biconj = 0.0;
  const std::array<CurvatureDimension, 3> cds = {
      CurvatureDimension(0.0, 2.0), CurvatureDimension(1.5, 3.0),
      CurvatureDimension(-1.0, 2.0)};
  for (const auto& cd : cds) {
    for (double t : {0.5, 2.0}) {
      const PsiDomain dom = psi_domain(cd, t);
      std::vector<double> ys;
      if (std::isfinite(dom.hi)) {
        for (double f : {0.2, 0.5, 0.8}) ys.push_back(dom.lo + f * (dom.hi - dom.lo));
      } else {
        for (double off : {0.3, 1.0, 5.0}) ys.push_back(dom.lo + off);
      }
      for (double y : ys) {
        const double z = psi_prime(cd, t, y);
        const auto lr = legendre_transform(cd, t, z);
        min_value = std::min(min_value, lr.value);
        const double back = y * z - lr.value;  // Psi**(y) by convex duality
        worst_biconj = std::max(worst_biconj, scaled_err(back, psi(cd, t, y)));
      }
    }
  }
  if (worst_biconj > 1e-8) {
    ok = false;
    note += "biconjugacy error " + num(worst_biconj) + "; ";
  }
  if (min_value < -1e-12) {
    ok = false;
    note += "transform dips to " + num(min_value) + "; ";
  }
  if (ok) {
    note = "anchor " + num(worst_anchor) + ", biconjugacy " + num(worst_biconj);
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 7. flat-case Harnack exponent closed form

bool criterion_flat_harnack(std::string& note) {
  std::mt19937 rng(20260821u);
  std::uniform_real_distribution<double> pick_n(1.0, 5.0);
  std::uniform_real_distribution<double> pick_s(0.05, 2.0);
  std::uniform_real_distribution<double> pick_gap(0.01, 3.0);
  std::uniform_real_distribution<double> pick_d(0.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double n = pick_n(rng);
    const double s = pick_s(rng);
    const double t = s + pick_gap(rng);
    const double d = pick_d(rng);
    const CurvatureDimension cd(0.0, n);
    const double got = harnack_exponent(cd, {s, t, d}).value;
    const double ref = 0.5 * n * std::log(t / s) + d * d / (4.0 * (t - s));
    worst = std::max(worst, scaled_err(got, ref));
  }
  note = "worst scaled error " + num(worst);
  return worst <= 1e-8;
}

// ---------------------------------------------------------------------------
// 8. dominance over the classical envelopes and the Li-Xu Harnack factor

bool criterion_dominance(std::string& note) {
  bool ok = true;
  const std::array<std::string, 6> wanted = {
      "davies(alpha=1.1)", "davies(alpha=2)", "davies(alpha=10)",
      "bakry_qian",        "hamilton",        "li_xu"};
  for (double rho : {-0.1, -1.0, -5.0}) {
    for (double t : {0.1, 1.0, 10.0}) {
      const auto rows = dominance_report(CurvatureDimension(rho, 3.0), t, 400);
      int seen = 0;
      for (const auto& row : rows) {
        if (std::find(wanted.begin(), wanted.end(), row.check) == wanted.end()) continue;
        ++seen;
        if (!(row.min_margin >= -1e-10)) {
          ok = false;
          note += row.check + " margin " + num(row.min_margin) + " at rho=" +
                  num(rho) + ", t=" + num(t) + "; ";
        }
      }
      if (seen != 6) {
        ok = false;
        note += "missing envelope rows at rho=" + num(rho) + ", t=" + num(t) + "; ";
      }
    }
  }

  std::mt19937 rng(9102113u);
  std::uniform_real_distribution<double> pick_k(0.1, 3.0);
  std::uniform_real_distribution<double> pick_n(1.0, 4.0);
  std::uniform_real_distribution<double> pick_s(0.05, 1.5);
  std::uniform_real_distribution<double> pick_gap(0.05, 2.0);
  std::uniform_real_distribution<double> pick_d(0.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    const double k = pick_k(rng);
    const double n = pick_n(rng);
    const double s = pick_s(rng);
    const double t = s + pick_gap(rng);
    const double d = pick_d(rng);
    const double ours = harnack_exponent(CurvatureDimension(-k, n), {s, t, d}).value;
    const double theirs = li_xu_harnack_exponent(n, k, s, t, d);
    if (!(ours <= theirs + 1e-10 * std::max(1.0, std::abs(theirs)))) {
      ok = false;
      note += "harnack exponent " + num(ours) + " above li_xu " + num(theirs) +
              " at (n,K,s,t,d)=(" + num(n) + "," + num(k) + "," + num(s) + "," +
              num(t) + "," + num(d) + "); ";
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 9. linearization identity and tangency

bool criterion_linearization(std::string& note) {
  bool ok = true;
  double worst_coef = 0.0;
  for (double k : {0.3, 1.0, 2.5}) {
    for (double t : {0.2, 1.0, 5.0}) {
      const LinearBound lb = linearized_bound_hyperbolic(-k, t, k);
      const double s = k * t;
      const double sh = std::sinh(s);
      const double a_ref = 1.0 + (std::sinh(2.0 * s) - 2.0 * s) / (2.0 * sh * sh);
      const double b_ref = k * (1.0 + std::cosh(s) / sh);
      worst_coef = std::max(worst_coef, scaled_err(lb.a, a_ref));
      worst_coef = std::max(worst_coef, scaled_err(lb.b, b_ref));
    }
  }
  if (worst_coef > 1e-12) {
    ok = false;
    note += "coefficient error " + num(worst_coef) + "; ";
  }

  double worst_tan = 0.0;
  for (double rho : {-2.0, -0.5, 1.0, 3.0}) {
    for (double t : {0.3, 1.0, 4.0}) {
      for (double alpha : {0.0, 0.7, 1.3}) {
        const LinearBound lb = linearized_bound_hyperbolic(rho, t, alpha);
        const double x0 = 1.0 - (alpha / rho) * (alpha / rho);
        const double line = 0.5 * rho * lb.a * x0 + lb.b;
        worst_tan = std::max(worst_tan, scaled_err(line, phi(rho, t, x0)));
      }
      for (double bt : {0.4, 1.2, 2.8}) {
        const double beta = bt / t;
        const LinearBound lb = linearized_bound_trigonometric(rho, t, beta);
        const double x0 = 1.0 + (beta / rho) * (beta / rho);
        const double line = 0.5 * rho * lb.a * x0 + lb.b;
        worst_tan = std::max(worst_tan, scaled_err(line, phi(rho, t, x0)));
      }
    }
  }
  if (worst_tan > 1e-9) {
    ok = false;
    note += "tangency error " + num(worst_tan) + "; ";
  }
  if (ok) note = "coefficients " + num(worst_coef) + ", tangency " + num(worst_tan);
  return ok;
}

// ---------------------------------------------------------------------------
// 10. discrete equality defect on the flat Gaussian kernel is second order

bool criterion_gaussian_equality(std::string& note) {
  bool ok = true;
  const double t = 0.5;
  for (int n : {1, 2, 3}) {
    std::array<double, 2> defect = {0.0, 0.0};
    int slot = 0;
    for (int cells : {250, 500}) {
      const ModelSpace space(SpaceKind::Euclidean, n, 1.0);
      const RadialGrid grid(8.0, cells);
      GridFunction p;
      p.positive = true;
      p.values.resize(static_cast<std::size_t>(cells) + 1);
      const double c0 = std::pow(4.0 * kPi * t, -0.5 * n);
      for (int i = 0; i <= cells; ++i) {
        const double r = grid.node(i);
        p.values[static_cast<std::size_t>(i)] = c0 * std::exp(-r * r / (4.0 * t));
      }
      const StateFields fields = compute_x_g(space, grid, p);
      double worst = 0.0;
      for (int i = 1; i < cells; ++i) {
        if (grid.node(i) > 6.0) break;
        const double d = fields.gamma_ratio.values[static_cast<std::size_t>(i)] -
                         fields.l_ratio.values[static_cast<std::size_t>(i)] -
                         n / (2.0 * t);
        worst = std::max(worst, std::abs(d));
      }
      defect[static_cast<std::size_t>(slot++)] = worst;
    }
    const double factor = defect[0] / defect[1];
    note += "n=" + std::to_string(n) + ": defect " + num(defect[0]) + " -> " +
            num(defect[1]) + " (factor " + num(factor) + "); ";
    if (!(factor >= 3.5) || !(defect[1] < 0.15)) ok = false;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 11/12. scenario ladders with grid-refinement extrapolation

struct LadderData {
  bool loaded = false;
  std::string error;
  // reports per refinement level 0:500, 1:1000, 2:2000, per scenario
  std::array<std::vector<MarginReport>, 3> sphere;
  std::array<std::vector<MarginReport>, 3> hyperbolic;
  std::array<std::vector<MarginReport>, 3> euclidean;
  double sphere_h2000 = 0.0;
  double hyperbolic_h2000 = 0.0;
  double euclidean_h2000 = 0.0;
};

const LadderData& ladders() {
  static const LadderData data = [] {
    LadderData d;
    try {
      const ScenarioConfig sphere = parse_scenario(curvebound_tests::kSphereScenario);
      const ScenarioConfig hyper = parse_scenario(curvebound_tests::kHyperbolicScenario);
      const ScenarioConfig euclid = parse_scenario(curvebound_tests::kEuclideanScenario);
      const int cells[3] = {500, 1000, 2000};
      for (int lvl = 0; lvl < 3; ++lvl) {
        d.sphere[static_cast<std::size_t>(lvl)] = run_scenario(sphere, cells[lvl]);
        d.hyperbolic[static_cast<std::size_t>(lvl)] = run_scenario(hyper, cells[lvl]);
        d.euclidean[static_cast<std::size_t>(lvl)] = run_scenario(euclid, cells[lvl]);
      }
      d.sphere_h2000 = sphere.radius / 2000.0;
      d.hyperbolic_h2000 = hyper.radius / 2000.0;
      d.euclidean_h2000 = euclid.radius / 2000.0;
      d.loaded = true;
    } catch (const std::exception& e) {
      d.error = e.what();
    }
    return d;
  }();
  return data;
}

bool is_pde_check(const std::string& name) {
  return name == "li_yau" || name == "x_domain" || name == "logsob" ||
         name == "logsob_inverse" || name == "harnack";
}

bool richardson_rows(const std::array<std::vector<MarginReport>, 3>& runs,
                     double h2000, const char* label, std::string& note) {
  bool ok = true;
  if (runs[0].size() != runs[2].size() || runs[1].size() != runs[2].size()) {
    note += std::string(label) + ": report shapes differ across refinements; ";
    return false;
  }
  for (std::size_t i = 0; i < runs[2].size(); ++i) {
    const MarginReport& coarse = runs[0][i];
    const MarginReport& mid = runs[1][i];
    const MarginReport& fine = runs[2][i];
    if (coarse.check != fine.check || mid.check != fine.check ||
        coarse.argmin_time != fine.argmin_time) {
      note += std::string(label) + ": row " + std::to_string(i) + " misaligned; ";
      ok = false;
      continue;
    }
    if (!is_pde_check(fine.check)) continue;
    // margin(h) = m* - c h^2 fitted on the two finest levels
    const double h2 = h2000 * h2000;
    const double c = (fine.min_margin - mid.min_margin) / (3.0 * h2);
    const double mstar = (4.0 * fine.min_margin - mid.min_margin) / 3.0;
    const bool extrapolated_ok = mstar >= -1e-12;
    const bool raw_ok = fine.min_margin >= -std::abs(c) * h2 - 1e-12;
    const bool flags_ok = coarse.passed && mid.passed && fine.passed;
    if (!extrapolated_ok || !raw_ok || !flags_ok) {
      ok = false;
      note += std::string(label) + " " + fine.check + "@t=" + num(fine.argmin_time) +
              ": m500=" + num(coarse.min_margin) + " m1000=" + num(mid.min_margin) +
              " m2000=" + num(fine.min_margin) + " c=" + num(c) + " m*=" + num(mstar) +
              (flags_ok ? "" : " (tolerance flag failed)") + "; ";
    }
  }
  return ok;
}

bool criterion_pde_margins(std::string& note) {
  const LadderData& d = ladders();
  if (!d.loaded) {
    note = "scenario ladder failed: " + d.error;
    return false;
  }
  bool ok = true;
  ok &= richardson_rows(d.sphere, d.sphere_h2000, "sphere", note);
  ok &= richardson_rows(d.hyperbolic, d.hyperbolic_h2000, "hyperbolic", note);
  ok &= richardson_rows(d.euclidean, d.euclidean_h2000, "euclidean", note);
  return ok;
}

bool criterion_envelope_decay(std::string& note) {
  const LadderData& d = ladders();
  if (!d.loaded) {
    note = "scenario ladder failed: " + d.error;
    return false;
  }
  bool ok = true;
  bool saw_ultra = false;
  bool saw_decay = false;
  for (const MarginReport& row : d.sphere[2]) {
    if (row.check == "ultra_envelope") {
      saw_ultra = true;
      if (!(row.min_margin >= 0.0) || !row.passed) {
        ok = false;
        note += "envelope margin " + num(row.min_margin) + " at t=" +
                num(row.argmin_time) + "; ";
      }
    } else if (row.check == "gradient_decay") {
      saw_decay = true;
      if (!(row.min_margin >= 0.0) || !row.passed) {
        ok = false;
        note += "gradient decay margin " + num(row.min_margin) + " at t=" +
                num(row.argmin_time) + "; ";
      }
    }
  }
  if (!saw_ultra || !saw_decay) {
    ok = false;
    note += "envelope/decay rows missing from the sphere run; ";
  }
  return ok;
}

// ---------------------------------------------------------------------------

void run(int index, const char* label, bool (*fn)(std::string&)) {
  std::string note;
  bool ok = false;
  try {
    ok = fn(note);
  } catch (const std::exception& e) {
    ok = false;
    note = std::string("exception: ") + e.what();
  }
  std::printf("[%s] %2d. %s\n", ok ? "PASS" : "FAIL", index, label);
  if (!ok && !note.empty()) std::printf("          %s\n", note.c_str());
  if (!ok) ++g_failures;
}

}  // namespace

int main() {
  std::printf("curvebound acceptance suite\n");
  run(1, "profile at x = 1 equals 1/t - rho/2 (20 pairs, 1e-14)", criterion_phi_at_one);
  run(2, "unified kernel matches the literal two-branch profile at the seam (1e-10)",
      criterion_branch_seam);
  run(3, "profile concavity: second differences <= 1e-12 on 200-point grids",
      criterion_concavity);
  run(4, "vanishing-curvature limit recovers the classical linear bound (1e-4)",
      criterion_flat_limit);
  run(5, "certified roots inside printed brackets; positive root <= 1 once rho t >= 2",
      criterion_root_brackets);
  run(6, "Legendre transform: flat anchors (1e-12), nonnegativity, biconjugacy (1e-8)",
      criterion_legendre);
  run(7, "flat-case Harnack exponent matches the closed form (20 tuples, 1e-8)",
      criterion_flat_harnack);
  run(8, "profile dominates Davies/Bakry-Qian/Hamilton/Li-Xu envelopes and Harnack factors",
      criterion_dominance);
  run(9, "hyperbolic linearization yields the Li-Xu coefficients (1e-12); tangency (1e-9)",
      criterion_linearization);
  run(10, "flat Gaussian equality defect shrinks at second order (factor >= 3.5)",
      criterion_gaussian_equality);
  run(11, "heat-flow margins pass grid-refinement extrapolation on all three model spaces",
      criterion_pde_margins);
  run(12, "sphere flow inside the convergence envelope; long-time gradient bound holds",
      criterion_envelope_decay);
  if (g_failures == 0) {
    std::printf("all 12 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
