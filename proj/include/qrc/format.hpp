// format.hpp - locale-independent number formatting for output files

#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <string>

namespace qrc {

/// Shortest round-trip decimal form; "NA" for NaN.
inline std::string format_number(double x) {
  if (std::isnan(x))
    return "NA";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline std::string format_number(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string("NA");
}

} // namespace qrc
