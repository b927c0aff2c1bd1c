// curvebound: evaluate the concave heat-semigroup bound profile and its
// consequences (roots, convergence envelopes, Harnack exponents, classical
// comparisons) and drive the radial PDE verification scenarios.
//
// Exit codes: 0 success, 1 at least one margin check failed, 2 usage or
// domain error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "curvebound/classical.hpp"
#include "curvebound/format.hpp"
#include "curvebound/heat_lab.hpp"
#include "curvebound/kernels.hpp"
#include "curvebound/psi.hpp"
#include "curvebound/roots.hpp"
#include "curvebound/scenario.hpp"
#include "curvebound/types.hpp"

namespace {

using namespace curvebound;

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

bool is_set(double v) { return !std::isnan(v); }

// CSV goes to --out when given, to stdout otherwise.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
  out << text;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

int cmd_phi(double rho, double t, double x) {
  std::printf("%s\n", format_sig17(phi(rho, t, x)).c_str());
  return 0;
}

int cmd_psi(double rho, double n, double t, double x) {
  const CurvatureDimension cd(rho, n);
  std::printf("%s\n", format_sig17(psi(cd, t, x)).c_str());
  return 0;
}

int cmd_legendre(double rho, double n, double t, double z) {
  const CurvatureDimension cd(rho, n);
  const LegendreResult res = legendre_transform(cd, t, z);
  std::printf("%s %s\n", format_sig17(res.value).c_str(),
              format_sig17(res.argmax).c_str());
  return 0;
}

int cmd_roots(double rho, double t) {
  const ProfileRootEnclosures enc = find_root_enclosures(rho, t);
  const auto line = [](const char* key, double v) {
    std::printf("%s=%s\n", key, format_sig17(v).c_str());
  };
  if (rho > 0.0) {
    line("xi1", enc.negative_root->midpoint());
    line("xi1_lo", enc.negative_root->lo);
    line("xi1_hi", enc.negative_root->hi);
    line("xi2", enc.positive_root->midpoint());
    line("xi2_lo", enc.positive_root->lo);
    line("xi2_hi", enc.positive_root->hi);
    const RootEstimateBrackets br = root_estimate_brackets(rho, t);
    if (br.negative_valid) {
      line("xi1_bracket_lo", br.negative_root.lo);
      line("xi1_bracket_hi", br.negative_root.hi);
    }
    if (br.positive_valid) {
      line("xi2_bracket_lo", br.positive_root.lo);
      line("xi2_bracket_hi", br.positive_root.hi);
    }
    std::printf("xi2_at_most_one=%s\n", positive_root_at_most_one(rho, t) ? "true" : "false");
  } else {
    line("xi", enc.sole_root->midpoint());
    line("xi_lo", enc.sole_root->lo);
    line("xi_hi", enc.sole_root->hi);
    if (t >= 2.0 / std::abs(rho)) {
      const SoleRootBracket br = sole_root_bracket(rho, t);
      line("xi_bracket_lo", br.lo_repaired);
      line("xi_bracket_hi", br.hi);
    }
  }
  return 0;
}

int cmd_harnack(double rho, double n, double s, double t, double d) {
  const CurvatureDimension cd(rho, n);
  const HarnackExponent e = harnack_exponent(cd, HarnackQuery{s, t, d});
  if (e.approximate) std::fprintf(stderr, "note: exponent computed at d = 1e-8\n");
  std::printf("%s\n", format_sig17(e.value).c_str());
  return 0;
}

int cmd_compare(double rho, double n, double t, int samples, const std::string& out_path) {
  const CurvatureDimension cd(rho, n);
  const std::vector<MarginReport> rows = dominance_report(cd, t, samples);
  emit(margin_reports_csv(rows), out_path);
  for (const MarginReport& r : rows) {
    if (!r.passed) return 1;
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& config_paths, const std::string& out_path) {
  std::vector<MarginReport> all;
  for (const std::string& path : config_paths) {
    const ScenarioConfig cfg = load_scenario_file(path);
    std::vector<MarginReport> rows = run_scenario(cfg);
    all.insert(all.end(), rows.begin(), rows.end());
  }
  emit(margin_reports_csv(all), out_path);
  for (const MarginReport& r : all) {
    if (!r.passed) return 1;
  }
  return 0;
}

struct CurveRequest {
  std::string which = "phi";
  double rho = kUnset;
  double n = 2.0;
  std::vector<double> times;
  double x_min = kUnset;
  double x_max = kUnset;
  int samples = 200;
  bool limit_column = false;
  std::string out_path;
};

int cmd_curves(CurveRequest req) {
  require(req.samples >= 2, "curves: need --samples >= 2");
  require(!req.times.empty(), "curves: need at least one --t");
  for (double t : req.times) require(t > 0.0, "curves: times must be positive");
  require(req.which == "phi" || req.which == "psi", "curves: --which must be phi or psi");
  if (req.limit_column) {
    require(req.which == "phi" && req.rho < 0.0,
            "curves: the long-time limit column needs the phi profile with rho < 0");
  }

  if (req.which == "phi") {
    require(req.rho != 0.0, "curves: phi profile needs rho != 0");
    require(is_set(req.x_min) && is_set(req.x_max), "curves: need --x-min and --x-max");
  } else {
    // Default the range to the profile's own interval where it is finite.
    const CurvatureDimension cd(req.rho, req.n);
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (double t : req.times) {
      const PsiDomain dom = psi_domain(cd, t);
      lo = std::max(lo, dom.lo);
      hi = std::min(hi, dom.hi);
    }
    if (!is_set(req.x_min)) req.x_min = lo;
    if (!is_set(req.x_max)) {
      require(std::isfinite(hi), "curves: need --x-max (the domain is unbounded)");
      req.x_max = hi;
    }
  }
  require(req.x_min <= req.x_max, "curves: need --x-min <= --x-max");

  // The whole requested range must sit inside every column's domain.
  for (double t : req.times) {
    if (req.which == "phi") {
      const double limit = phi_domain_limit(req.rho, t);
      require(req.x_max < limit, "curves: x range leaves the domain at t = " +
                                     format_double(t) + " (needs x < " +
                                     format_double(limit) + ")");
    } else {
      const CurvatureDimension cd(req.rho, req.n);
      const PsiDomain dom = psi_domain(cd, t);
      const double slack = 1e-12 * std::max(1.0, std::abs(dom.lo));
      require(req.x_min >= dom.lo - slack && req.x_max <= dom.hi + slack,
              "curves: x range leaves the profile interval at t = " + format_double(t));
    }
  }

  std::string csv = "x";
  for (size_t k = 0; k < req.times.size(); ++k) {
    csv += ",value_t" + std::to_string(k + 1);
  }
  if (req.limit_column) csv += ",limit";
  csv += '\n';

  const CurvatureDimension cd(req.rho == 0.0 ? 0.0 : req.rho, req.n);
  for (int i = 0; i < req.samples; ++i) {
    const double x =
        req.x_min + (req.x_max - req.x_min) * static_cast<double>(i) /
                        static_cast<double>(req.samples - 1);
    csv += format_double(x);
    for (double t : req.times) {
      csv += ',';
      csv += format_double(req.which == "phi" ? phi(req.rho, t, x) : psi(cd, t, x));
    }
    if (req.limit_column) {
      csv += ',';
      if (x <= 1.0) csv += format_double(phi_large_time_limit(req.rho, x));
      // out of the limit curve's reach: leave the cell empty
    }
    csv += '\n';
  }
  emit(csv, req.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"concave heat-semigroup bound profile: values, roots, Harnack exponents,\n"
               "classical comparisons, and radial PDE verification"};
  app.require_subcommand(1);
  int code = 0;

  double rho = kUnset, n = 2.0, t = kUnset, s = kUnset, d = kUnset, x = kUnset;
  int samples = 400;
  std::string out_path;
  std::vector<std::string> config_paths;

  CLI::App* c_phi = app.add_subcommand("phi", "evaluate the bound profile at (rho, t, x)");
  c_phi->add_option("--rho", rho)->required();
  c_phi->add_option("--t", t)->required();
  c_phi->add_option("--x", x)->required();
  c_phi->callback([&] { code = cmd_phi(rho, t, x); });

  CLI::App* c_psi = app.add_subcommand("psi", "evaluate the gradient profile at (rho, n, t, x)");
  c_psi->add_option("--rho", rho)->required();
  c_psi->add_option("--n", n)->required();
  c_psi->add_option("--t", t)->required();
  c_psi->add_option("--x", x)->required();
  c_psi->callback([&] { code = cmd_psi(rho, n, t, x); });

  CLI::App* c_leg = app.add_subcommand(
      "legendre", "convex conjugate of the gradient profile: prints value and argmax");
  c_leg->add_option("--rho", rho)->required();
  c_leg->add_option("--n", n)->required();
  c_leg->add_option("--t", t)->required();
  c_leg->add_option("--x", x, "conjugate argument")->required();
  c_leg->callback([&] { code = cmd_legendre(rho, n, t, x); });

  CLI::App* c_roots = app.add_subcommand("roots", "roots of the profile with enclosures and brackets");
  c_roots->add_option("--rho", rho)->required();
  c_roots->add_option("--t", t)->required();
  c_roots->callback([&] { code = cmd_roots(rho, t); });

  CLI::App* c_har = app.add_subcommand("harnack", "Harnack exponent between times s and t at distance d");
  c_har->add_option("--rho", rho)->required();
  c_har->add_option("--n", n)->required();
  c_har->add_option("--s", s)->required();
  c_har->add_option("--t", t)->required();
  c_har->add_option("--d", d)->required();
  c_har->callback([&] { code = cmd_harnack(rho, n, s, t, d); });

  CLI::App* c_cmp = app.add_subcommand(
      "compare", "margin table of the profile against the classical gradient bounds");
  c_cmp->add_option("--rho", rho)->required();
  c_cmp->add_option("--n", n)->required();
  c_cmp->add_option("--t", t)->required();
  c_cmp->add_option("--samples", samples, "grid points per margin scan");
  c_cmp->add_option("--out", out_path, "write CSV here instead of stdout");
  c_cmp->callback([&] { code = cmd_compare(rho, n, t, samples, out_path); });

  CLI::App* c_ver = app.add_subcommand("verify", "run PDE scenario checks from config files");
  c_ver->add_option("--config", config_paths, "scenario config file (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  c_ver->add_option("--out", out_path, "write CSV here instead of stdout");
  c_ver->callback([&] { code = cmd_verify(config_paths, out_path); });

  CurveRequest curve;
  CLI::App* c_cur = app.add_subcommand("curves", "sample profile curves to CSV");
  c_cur->add_option("--which", curve.which, "phi or psi (default phi)");
  c_cur->add_option("--rho", curve.rho)->required();
  c_cur->add_option("--n", curve.n, "dimension (psi profile)");
  c_cur->add_option("--t", curve.times, "time column (repeatable)")->required();
  c_cur->add_option("--x-min", curve.x_min);
  c_cur->add_option("--x-max", curve.x_max);
  c_cur->add_option("--samples", curve.samples, "rows (default 200)");
  c_cur->add_flag("--limit", curve.limit_column, "append the long-time limit column (rho < 0)");
  c_cur->add_option("--out", curve.out_path, "write CSV here instead of stdout");
  c_cur->callback([&] { code = cmd_curves(curve); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int cli_code = app.exit(e);  // prints help / error message
    return cli_code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return code;
}
