#pragma once

#include "liftlab/distributions.hpp"

#include <vector>

namespace liftlab {

/// Convex hull of finitely many distributions on a shared carrier.
class ConvexSet {
 public:
  ConvexSet() = default;
  /// Throws ValidationError when empty or when carriers differ.
  explicit ConvexSet(std::vector<Distribution> generators);

  const std::vector<Distribution>& generators() const { return generators_; }
  std::size_t carrier_size() const { return generators_.front().size(); }
  std::size_t size() const { return generators_.size(); }

  /// Copy with exact duplicate generators removed (first occurrence kept).
  ConvexSet deduplicated() const;

 private:
  std::vector<Distribution> generators_;
};

/// Generator-wise pushforward.
ConvexSet pushforward(std::span<const std::size_t> map, std::size_t target_size, const ConvexSet& set);

}  // namespace liftlab
