#pragma once

#include "liftlab/matrix.hpp"
#include "liftlab/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace liftlab {

/// Sorted, duplicate-free list of point indices.
using PointSet = std::vector<std::size_t>;

PointSet make_point_set(std::vector<std::size_t> indices, std::size_t carrier_size);

/// Finitely supported probability distribution, stored densely over the carrier.
class Distribution {
 public:
  Distribution() = default;

  /// Throws ValidationError unless all masses are >= 0 and sum to exactly 1.
  static Distribution from_masses(std::vector<Rational> masses);
  static Distribution dirac(std::size_t carrier_size, std::size_t point);

  std::size_t size() const { return mass_.size(); }
  const Rational& operator[](std::size_t i) const { return mass_[i]; }
  const std::vector<Rational>& masses() const { return mass_; }

  Rational mass_of(const PointSet& set) const;
  PointSet support() const;

  bool operator==(const Distribution&) const = default;

 private:
  explicit Distribution(std::vector<Rational> masses) : mass_(std::move(masses)) {}
  std::vector<Rational> mass_;
};

/// Function from points to [0,1].
class FuzzyPredicate {
 public:
  FuzzyPredicate() = default;
  /// Throws ValidationError if a value lies outside [0,1].
  explicit FuzzyPredicate(std::vector<Rational> values);

  static FuzzyPredicate constant(std::size_t size, const Rational& c);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }

  FuzzyPredicate complement() const;

  bool operator==(const FuzzyPredicate&) const = default;

 private:
  std::vector<Rational> values_;
};

/// Pointwise truncated sum f (+) g.
FuzzyPredicate truncated_sum(const FuzzyPredicate& f, const FuzzyPredicate& g);

/// f <= g pointwise.
bool pointwise_le(const FuzzyPredicate& f, const FuzzyPredicate& g);

/// Joint distribution on X x Y (row-major) with its two marginals.
class Coupling {
 public:
  Coupling() = default;

  /// Throws ValidationError unless entries are >= 0 and the row/column sums
  /// match `left`/`right` exactly.
  static Coupling from_joint(RationalMatrix joint, const Distribution& left, const Distribution& right);

  const RationalMatrix& joint() const { return joint_; }
  const Distribution& left() const { return left_; }
  const Distribution& right() const { return right_; }

  /// The joint as a distribution on the row-major product carrier.
  Distribution flatten() const;

  /// Support as (x, y) index pairs, row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> support() const;

 private:
  RationalMatrix joint_;
  Distribution left_;
  Distribution right_;
};

/// Marginal laws hold exactly.
bool is_coupling_of(const RationalMatrix& joint, const Distribution& left, const Distribution& right);

Rational expectation(const Distribution& mu, const FuzzyPredicate& f);

/// Expectation of an arbitrary (not necessarily [0,1]-valued) function.
Rational expectation(const Distribution& mu, std::span<const Rational> f);

/// Throws ValidationError unless weights are >= 0, sum to 1, and all
/// distributions share a carrier.
Distribution convex_combine(std::span<const Rational> weights, std::span<const Distribution> dists);

/// Image measure under `map` (a total function into [0, target_size)).
Distribution pushforward(std::span<const std::size_t> map, std::size_t target_size, const Distribution& mu);

}  // namespace liftlab
