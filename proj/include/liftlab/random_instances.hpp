#pragma once

#include "liftlab/behavioural.hpp"
#include "liftlab/convex_set.hpp"
#include "liftlab/distributions.hpp"
#include "liftlab/spaces.hpp"

#include <cstdint>
#include <random>

namespace liftlab {

/// Seeded generator of small rational instances.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  std::size_t index(std::size_t lo, std::size_t hi);  // uniform in [lo, hi]
  bool coin(double p = 0.5);

  /// k / den with den <= max_den, uniform-ish in [0,1].
  Rational unit(unsigned max_den = 12);

  /// Pseudometric whose entries share one denominator <= max_den, made to
  /// satisfy the triangle inequality by shortest-path closure. With
  /// `zero_pair` two distinct points are forced to distance 0.
  PseudometricSpace pseudometric(std::size_t n, unsigned max_den = 12, bool zero_pair = false);

  /// Masses w_i / sum(w), weights in [0, max_weight], some possibly zero.
  Distribution distribution(std::size_t n, unsigned max_weight = 6);

  FuzzyRelation relation(std::size_t nx, std::size_t ny, unsigned max_den = 12);
  FuzzyPredicate predicate(std::size_t n, unsigned max_den = 12);

  /// Non-empty subset of [0, n).
  PointSet point_set(std::size_t n);

  ConvexSet convex_set(std::size_t n, std::size_t generators, unsigned max_weight = 6);

  /// Markov chain on n states; labelled chains get outputs with denominators <= 12.
  Coalgebra markov_chain(std::size_t n, bool labelled);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace liftlab
