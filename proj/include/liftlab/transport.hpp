#pragma once

#include "liftlab/distributions.hpp"
#include "liftlab/matrix.hpp"

#include <vector>

namespace liftlab {

/// Optimal coupling with certifying potentials.
///
/// Potentials (f, g) satisfy g(y) - f(x) <= cost(x, y) everywhere, with
/// equality wherever the plan is positive, and
/// sum_y demand(y) g(y) - sum_x supply(x) f(x) == cost.
struct TransportPlan {
  Coupling plan;
  Rational cost;
  std::vector<Rational> source_potential;  // f on X
  std::vector<Rational> target_potential;  // g on Y
};

/// Exact minimum-cost coupling of supply and demand.
TransportPlan solve_transport(const RationalMatrix& cost, const Distribution& supply, const Distribution& demand);

/// Potentials from the explicitly stated dual program:
/// max E_demand[g] - E_supply[f] s.t. g(y) - f(x) <= cost(x, y).
/// Returns (f, g, value).
struct TransportDual {
  std::vector<Rational> source_potential;
  std::vector<Rational> target_potential;
  Rational value;
};
TransportDual solve_transport_dual(const RationalMatrix& cost, const Distribution& supply, const Distribution& demand);

/// Independent verifier for every TransportPlan post-condition.
bool verify_transport_plan(const RationalMatrix& cost, const Distribution& supply, const Distribution& demand,
                           const TransportPlan& plan);

/// Sum over cells of joint * cost.
Rational plan_cost(const RationalMatrix& cost, const RationalMatrix& joint);

}  // namespace liftlab
