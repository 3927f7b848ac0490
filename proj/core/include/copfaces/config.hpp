#pragma once

#include <cstddef>

namespace copfaces {

/// Caps for the exhaustive routines.
struct Limits {
  /// Largest order for which support enumeration (2^p - 1 supports) runs.
  int max_exhaustive_order = 8;
  /// Largest number of simplex grid points generated before failing.
  std::size_t max_grid_points = 2'000'000;
};

/// Largest order an IndexSet can represent.
inline constexpr int kMaxOrder = 62;

}  // namespace copfaces
