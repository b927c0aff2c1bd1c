#pragma once

#include <charconv>
#include <string>
#include <vector>

#include "curvebound/types.hpp"

namespace curvebound {

// Shortest decimal representation that round-trips to the same double.
// Locale-independent; used for all console and CSV numeric output so that
// emitted files are byte-stable across runs and platforms.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Fixed 17-significant-digit form (every double is pinned down exactly by 17
// digits); used where the interface promises full printed precision.
inline std::string format_sig17(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

// Serializes margin reports as CSV: UTF-8, LF line endings, header mandatory.
inline std::string margin_reports_csv(const std::vector<MarginReport>& reports) {
  std::string out = "check,min_margin,argmin_node,argmin_time,tolerance,passed\n";
  for (const auto& r : reports) {
    out += r.check;
    out += ',';
    out += format_double(r.min_margin);
    out += ',';
    out += std::to_string(r.argmin_node);
    out += ',';
    out += format_double(r.argmin_time);
    out += ',';
    out += format_double(r.tolerance);
    out += ',';
    out += r.passed ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace curvebound
