#pragma once

#include <cstddef>
#include <vector>

#include "smx/kernel.hpp"
#include "smx/value.hpp"

namespace smx {

// Bounds describing a finite carrier of values. A value is in the carrier
// when its rank is at most rank_bound and, hereditarily, every set has at
// most set_width_bound elements, every matrix has both dimensions at most
// matrix_dim_bound, and matrices nest at most nest_depth_bound deep.
// A matrix_dim_bound below 2 or a nest_depth_bound of 0 yields a
// matrix-free carrier.
struct UniverseSpec {
  std::size_t rank_bound = 2;
  std::size_t set_width_bound = 2;
  std::size_t matrix_dim_bound = 2;
  std::size_t nest_depth_bound = 1;

  bool operator==(const UniverseSpec&) const = default;
};

// Enumerates every value within the bounds, ordered by rank and then by
// canonical_compare within each rank. The result is deterministic, closed
// under taking elements and entries, and monotone in each bound. Throws
// CapError if more than `cap` values would be produced.
std::vector<Value> generate_universe(const UniverseSpec& u,
                                     std::size_t cap = kDefaultCap);

}  // namespace smx
