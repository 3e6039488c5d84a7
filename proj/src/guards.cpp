#include "liftlab/guards.hpp"

#include <cstdlib>
#include <string>

namespace liftlab {

namespace {

template <typename T>
void read_env(const char* name, T& field) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return;
  try {
    field = static_cast<T>(std::stoull(raw));
  } catch (const std::exception&) {
    // Unparsable overrides are ignored.
  }
}

GuardLimits load() {
  GuardLimits limits;
  read_env("LIFTLAB_GUARD_LP_SUPPORT", limits.lp_direct_support);
  read_env("LIFTLAB_GUARD_SPANNING_TREE", limits.spanning_tree_points);
  read_env("LIFTLAB_GUARD_GRID_VARS", limits.grid_variables);
  read_env("LIFTLAB_GUARD_GRID_CANDIDATES", limits.grid_candidates);
  return limits;
}

}  // namespace

const GuardLimits& guard_limits() {
  static const GuardLimits limits = load();
  return limits;
}

}  // namespace liftlab
