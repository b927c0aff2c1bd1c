#pragma once
// Scenario runner: plain-text key=value configs describe a model space, a
// grid, initial data, and the list of semigroup checks to run; the runner
// returns one margin report per check and time.
//
// Recognized keys:
//   name          optional label
//   space         euclidean | sphere | hyperbolic
//   n             dimension (integer >= 1)
//   kappa         curvature scale (> 0; default 1, unused for euclidean)
//   N             grid cells (>= 100)
//   R             truncation radius (sphere: defaults to pi/kappa and must
//                 equal it when given)
//   f0            initial data: constant:<c> | cosine:<amp> (sphere only)
//                 | gaussian:<floor>:<sigma>
//   times         comma list for li_yau / x_domain / logsob
//   checks        comma list from {li_yau, x_domain, logsob, harnack, ultra,
//                 gradient_decay}
//   harnack_s, harnack_t   the two times of the harnack comparison
//   ultra_times   comma list for the convergence envelope
//   gradient_times comma list for the gradient decay bound
//   tol_factor    margin tolerance = tol_factor * h^2 (grid-refinement
//                 calibrated constant)
// Lines starting with '#' (or blank) are ignored; '#' also starts an inline
// comment.

#include <string>
#include <vector>

#include "curvebound/heat_lab.hpp"
#include "curvebound/types.hpp"

namespace curvebound {

struct ScenarioConfig {
  std::string name;
  ModelSpace space;
  int grid_cells = 0;
  double radius = 0.0;
  std::string f0_spec;
  std::vector<double> times;
  std::vector<std::string> checks;
  double harnack_s = 0.0;
  double harnack_t = 0.0;
  std::vector<double> ultra_times;
  std::vector<double> gradient_times;
  double tol_factor = 0.0;
};

[[nodiscard]] ScenarioConfig parse_scenario(const std::string& text);
[[nodiscard]] ScenarioConfig load_scenario_file(const std::string& path);

// Initial data on the given grid per the config's f0 spec.
[[nodiscard]] GridFunction make_initial_data(const ScenarioConfig& cfg,
                                             const RadialGrid& grid);

// Harnack node pairs: nearest nodes to fixed fractions of the data region
// (the whole sphere; half the truncated domain otherwise), all ordered pairs.
// Resolution-independent up to one grid spacing, so refinement studies
// compare like with like.
[[nodiscard]] std::vector<std::pair<int, int>> harnack_node_pairs(
    const ScenarioConfig& cfg, const RadialGrid& grid);

// Run every requested check; margin tolerance is tol_factor * h^2 for the
// grid actually used.  The override variant swaps in a different cell count
// (grid-refinement calibration).
[[nodiscard]] std::vector<MarginReport> run_scenario(const ScenarioConfig& cfg);
[[nodiscard]] std::vector<MarginReport> run_scenario(const ScenarioConfig& cfg,
                                                     int cells_override);

}  // namespace curvebound
