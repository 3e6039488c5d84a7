#pragma once

#include "liftlab/distributions.hpp"
#include "liftlab/modalities.hpp"
#include "liftlab/spaces.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace liftlab {

/// Price functions (f on X, g on Y) with g(y) - f(x) <= r(x, y).
struct NonexpansivePair {
  FuzzyPredicate f;
  FuzzyPredicate g;
};

bool is_nonexpansive_pair(const FuzzyRelation& r, const NonexpansivePair& pair);

/// A coupling of two point sets: a relation whose projections are onto.
using PointCoupling = std::vector<std::pair<std::size_t, std::size_t>>;

enum class Exactness { exact, rounded, lower_bound, upper_bound };

const char* to_string(Exactness e);

using LiftWitness = std::variant<std::monostate, Coupling, PointCoupling, FuzzyPredicate, NonexpansivePair>;

struct LiftedValue {
  Scalar value;
  Exactness exactness = Exactness::exact;
  LiftWitness witness;
  std::optional<Scalar> upper;          // proved upper bound for lower-bound results
  std::optional<Rational> epsilon_star;  // generally: optimal threshold
  std::optional<Rational> margin;        // certified value of a Kantorovich witness
};

struct LiftOptions {
  Rational grid_delta = Rational(1, 16);  // step of the grid oracle used for p-moment
  unsigned witness_depth = 8;              // certifies eps = value - 2^-depth
  bool certify = true;                     // build Kantorovich witnesses for generally
};

/// inf over couplings c of lambda(r)(c). Sup uses point sets; all other
/// kinds use distributions. Inf is rejected: it is not subadditive and its
/// coupling lifting is not a distance.
LiftedValue wasserstein(const Modality& m, const FuzzyRelation& r, const ModalArgument& s, const ModalArgument& t,
                        const LiftOptions& options = {});
LiftedValue wasserstein(const Modality& m, const PseudometricSpace& d, const ModalArgument& s,
                        const ModalArgument& t, const LiftOptions& options = {});

/// sup over nonexpansive f of |lambda(f)(t) - lambda(f)(s)|.
LiftedValue kantorovich(const Modality& m, const PseudometricSpace& d, const ModalArgument& s,
                        const ModalArgument& t, const LiftOptions& options = {});

/// sup over r-nonexpansive (f, g) of lambda(g)(t) (-) lambda(f)(s).
LiftedValue kantorovich_relational(const Modality& m, const FuzzyRelation& r, const ModalArgument& s,
                                   const ModalArgument& t, const LiftOptions& options = {});

/// Best objective over price functions with values on the grid {0, delta, ..., 1}.
/// A lower bound on the Kantorovich value. Throws GuardError when the grid is
/// too large.
LiftedValue kantorovich_grid_oracle(const Modality& m, const PseudometricSpace& d, const ModalArgument& s,
                                    const ModalArgument& t, const Rational& delta);
LiftedValue kantorovich_grid_oracle(const Modality& m, const FuzzyRelation& r, const ModalArgument& s,
                                    const ModalArgument& t, const Rational& delta);

/// max(max_a min_b r(a,b), max_b min_a r(a,b)); 0 for two empty sets, 1 when
/// exactly one is empty.
Rational hausdorff(const FuzzyRelation& r, const PointSet& a, const PointSet& b);

/// Re-evaluates a witness against its value. Couplings must reproduce the
/// value exactly; price functions must be nonexpansive and reach `margin`.
bool verify_lifted_value(const Modality& m, const FuzzyRelation& r, const ModalArgument& s, const ModalArgument& t,
                         const LiftedValue& v);

}  // namespace liftlab
