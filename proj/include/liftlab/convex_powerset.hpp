#pragma once

#include "liftlab/convex_set.hpp"
#include "liftlab/distributions.hpp"
#include "liftlab/spaces.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liftlab {

/// Closest point of a convex hull under the Kantorovich-Wasserstein distance.
struct PointToSet {
  Rational value;
  std::vector<Rational> coefficients;  // weights on the set's generators
  Distribution nearest;                // sum_j coefficients[j] * generator[j]
  Coupling plan;                       // optimal coupling of (source, nearest)
};

/// min over nu in conv(B) of d_K(d)(mu, nu), as one joint program over the
/// coupling and the convex weights.
PointToSet point_to_set_distance(const PseudometricSpace& space, const Distribution& mu, const ConvexSet& set);

/// min over generators nu_j of d_K(d)(mu, nu_j). An upper bound on the hull
/// distance, not equal to it in general.
Rational generator_only_distance(const PseudometricSpace& space, const Distribution& mu, const ConvexSet& set);

/// The direction sup_{mu in from} inf_{nu in to} d_K(mu, nu), attained at a
/// generator of `from`.
struct DirectionWitness {
  std::size_t generator = 0;
  Rational value;
  std::vector<Rational> coefficients;
  Distribution nearest;
};

struct HkResult {
  Rational value;
  std::optional<DirectionWitness> a_to_b;
  std::optional<DirectionWitness> b_to_a;
  std::optional<FuzzyPredicate> dual;  // price function from the dual algorithm
  std::string algorithm;
};

/// Hausdorff over Kantorovich, one point-to-set program per generator.
HkResult dhk_composite(const PseudometricSpace& space, const ConvexSet& a, const ConvexSet& b);

/// Same value via enumeration of the spanning trees of K_{n,n}; one small
/// program per (generator, tree). Guarded at n <= 4 by default.
HkResult dhk_spanning_tree(const PseudometricSpace& space, const ConvexSet& a, const ConvexSet& b);

/// Same value via the price-function side: per generator pair and sign, one
/// program over f: X -> [0,1] nonexpansive.
HkResult dhk_dual(const PseudometricSpace& space, const ConvexSet& a, const ConvexSet& b);

/// |sup_{nu in B} E_nu[f] - sup_{mu in A} E_mu[f]|.
Rational convex_price_gap(const FuzzyPredicate& f, const ConvexSet& a, const ConvexSet& b);

/// n^(2n-2), the number of spanning trees of K_{n,n}. Saturates at UINT64_MAX.
std::uint64_t bipartite_spanning_tree_count(std::size_t n);

/// Spanning trees of K_{n,n}; each tree lists edges (left, right).
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> bipartite_spanning_trees(std::size_t n);

/// |f(x) - f(y)| <= d(x, y) for all x, y.
bool is_nonexpansive(const PseudometricSpace& space, const FuzzyPredicate& f);

}  // namespace liftlab
