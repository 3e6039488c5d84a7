#pragma once

#include <cstddef>
#include <cstdint>

namespace liftlab {

/// Size limits for the exponential enumerations. Defaults can be overridden
/// by the environment variables named next to each field.
struct GuardLimits {
  std::size_t lp_direct_support = 15;     // LIFTLAB_GUARD_LP_SUPPORT
  std::size_t spanning_tree_points = 4;   // LIFTLAB_GUARD_SPANNING_TREE
  std::size_t grid_variables = 6;         // LIFTLAB_GUARD_GRID_VARS
  // Budget of grid points^variables; 17^6 is six variables at step 1/16.
  std::uint64_t grid_candidates = 24137569;  // LIFTLAB_GUARD_GRID_CANDIDATES
};

/// Limits read once from the environment.
const GuardLimits& guard_limits();

}  // namespace liftlab
