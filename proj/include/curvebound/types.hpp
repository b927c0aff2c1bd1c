#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace curvebound {

// Curvature-dimension parameter pair (rho, n).  rho is the curvature lower
// bound (any sign), n the dimension parameter (>= 1, not necessarily an
// integer).
struct CurvatureDimension {
  double rho;
  double n;

  CurvatureDimension(double rho_, double n_) : rho(rho_), n(n_) {
    if (!std::isfinite(rho)) {
      throw std::invalid_argument("CurvatureDimension: rho must be finite");
    }
    if (!std::isfinite(n) || n < 1.0) {
      throw std::invalid_argument("CurvatureDimension: n must be finite and >= 1");
    }
  }
};

// Outcome of a minimum-margin scan: the smallest value of (bound - quantity)
// over a grid of nodes, together with where it was attained and whether it
// clears the tolerance.  Margins are >= 0 when the bound holds exactly; a
// check passes when min_margin >= -tolerance.
struct MarginReport {
  std::string check;
  double min_margin = 0.0;
  long argmin_node = -1;
  double argmin_time = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

}  // namespace curvebound
