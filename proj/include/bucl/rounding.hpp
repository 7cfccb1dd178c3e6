#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

namespace bucl {

// Sample-size arithmetic is done in doubles; a relative slack keeps values
// such as 4 * 2 * 0.01 * 2000 from rounding up to 161.

inline std::size_t ceil_count(double x) {
  if (!(x > 0)) return 0;
  if (x >= static_cast<double>(std::numeric_limits<std::size_t>::max() / 2)) {
    return std::numeric_limits<std::size_t>::max() / 2;
  }
  return static_cast<std::size_t>(std::ceil(x - 1e-9 * std::max(1.0, x)));
}

inline std::size_t floor_count(double x) {
  if (!(x > 0)) return 0;
  return static_cast<std::size_t>(std::floor(x + 1e-9 * std::max(1.0, x)));
}

}  // namespace bucl
