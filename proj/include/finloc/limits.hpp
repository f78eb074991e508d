#pragma once

#include <cstddef>

namespace finloc {

/// Caps on the exponential enumerations. Exceeding one raises SizeError.
struct Limits {
  std::size_t max_downsets = std::size_t{1} << 20;
  std::size_t max_frame_elements = 2048;
  /// Largest carrier whose full powerset a literal quantifier may walk.
  std::size_t max_subset_carrier = 16;
  /// Way-below walks subsets of subsets (3^n); kept separately small.
  std::size_t max_way_below_elements = 12;
  /// Largest number of maps a single map enumeration may visit.
  std::size_t max_maps = std::size_t{1} << 22;
};

inline const Limits& default_limits() noexcept {
  static const Limits limits{};
  return limits;
}

}  // namespace finloc
