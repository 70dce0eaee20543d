#pragma once

#include <algorithm>
#include <cmath>

namespace specbound {

/// |x - y| measured against max(1, |x|, |y|).
inline double relative_difference(double x, double y) {
  return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

inline bool nearly_equal(double x, double y, double tol) {
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace specbound
