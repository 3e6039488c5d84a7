#include "liftlab/transport.hpp"

#include "liftlab/lp.hpp"

namespace liftlab {

namespace {

void check_shapes(const RationalMatrix& cost, const Distribution& supply, const Distribution& demand) {
  if (cost.rows() != supply.size() || cost.cols() != demand.size()) {
    throw ValidationError("transport dimension mismatch: cost is " + std::to_string(cost.rows()) + "x" +
                          std::to_string(cost.cols()) + ", marginals have " + std::to_string(supply.size()) +
                          " and " + std::to_string(demand.size()) + " points");
  }
  for (const auto& c : cost.data()) {
    if (c < 0) throw ValidationError("negative transport cost " + to_string(c));
  }
}

bool potentials_certify(const RationalMatrix& cost, const Distribution& supply, const Distribution& demand,
                        const RationalMatrix& joint, const Rational& value, const std::vector<Rational>& f,
                        const std::vector<Rational>& g) {
  if (f.size() != supply.size() || g.size() != demand.size()) return false;
  for (std::size_t x = 0; x < supply.size(); ++x) {
    for (std::size_t y = 0; y < demand.size(); ++y) {
      const Rational slack = cost(x, y) - (g[y] - f[x]);
      if (slack < 0) return false;
      if (joint(x, y) > 0 && slack != 0) return false;
    }
  }
  return expectation(demand, g) - expectation(supply, f) == value;
}

}  // namespace

Rational plan_cost(const RationalMatrix& cost, const RationalMatrix& joint) {
  Rational total;
  for (std::size_t i = 0; i < joint.data().size(); ++i) {
    if (joint.data()[i] != 0) total += joint.data()[i] * cost.data()[i];
  }
  return total;
}

TransportDual solve_transport_dual(const RationalMatrix& cost, const Distribution& supply,
                                   const Distribution& demand) {
  check_shapes(cost, supply, demand);
  const std::size_t n = supply.size();
  const std::size_t m = demand.size();
  LinearProgram lp(Sense::maximize);
  for (std::size_t x = 0; x < n; ++x) lp.add_variable("f" + std::to_string(x), std::nullopt);
  for (std::size_t y = 0; y < m; ++y) lp.add_variable("g" + std::to_string(y), std::nullopt);
  for (std::size_t x = 0; x < n; ++x) lp.set_objective_coefficient(x, -supply[x]);
  for (std::size_t y = 0; y < m; ++y) lp.set_objective_coefficient(n + y, demand[y]);
  // Pin one potential; the objective is shift invariant.
  if (n > 0) {
    auto row = lp.zero_row();
    row[0] = 1;
    lp.add_constraint(std::move(row), Relation::equal, Rational(0), "pin");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      auto row = lp.zero_row();
      row[x] = -1;
      row[n + y] = 1;
      lp.add_constraint(std::move(row), Relation::less_equal, cost(x, y));
    }
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) throw InternalError("transport dual program is not optimal");
  TransportDual dual;
  dual.source_potential.assign(sol.assignment.begin(), sol.assignment.begin() + static_cast<std::ptrdiff_t>(n));
  dual.target_potential.assign(sol.assignment.begin() + static_cast<std::ptrdiff_t>(n), sol.assignment.end());
  dual.value = sol.value;
  return dual;
}

TransportPlan solve_transport(const RationalMatrix& cost, const Distribution& supply, const Distribution& demand) {
  check_shapes(cost, supply, demand);
  const std::size_t n = supply.size();
  const std::size_t m = demand.size();
  LinearProgram lp(Sense::minimize);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      lp.add_variable("p" + std::to_string(x) + "_" + std::to_string(y));
      lp.set_objective_coefficient(x * m + y, cost(x, y));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    auto row = lp.zero_row();
    for (std::size_t y = 0; y < m; ++y) row[x * m + y] = 1;
    lp.add_constraint(std::move(row), Relation::equal, supply[x], "supply" + std::to_string(x));
  }
  for (std::size_t y = 0; y < m; ++y) {
    auto row = lp.zero_row();
    for (std::size_t x = 0; x < n; ++x) row[x * m + y] = 1;
    lp.add_constraint(std::move(row), Relation::equal, demand[y], "demand" + std::to_string(y));
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) throw InternalError("transport program is not optimal");

  RationalMatrix joint(n, m);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < m; ++y) joint(x, y) = sol.assignment[x * m + y];
  }
  TransportPlan result;
  result.cost = sol.value;
  // Shadow price of a supply row is -f(x); of a demand row, g(y).
  result.source_potential.resize(n);
  result.target_potential.resize(m);
  for (std::size_t x = 0; x < n; ++x) result.source_potential[x] = -sol.duals[x];
  for (std::size_t y = 0; y < m; ++y) result.target_potential[y] = sol.duals[n + y];
  if (!potentials_certify(cost, supply, demand, joint, result.cost, result.source_potential,
                          result.target_potential)) {
    TransportDual dual = solve_transport_dual(cost, supply, demand);
    result.source_potential = std::move(dual.source_potential);
    result.target_potential = std::move(dual.target_potential);
    if (!potentials_certify(cost, supply, demand, joint, result.cost, result.source_potential,
                            result.target_potential)) {
      throw InternalError("transport potentials fail to certify the plan");
    }
  }
  result.plan = Coupling::from_joint(std::move(joint), supply, demand);
  return result;
}

bool verify_transport_plan(const RationalMatrix& cost, const Distribution& supply, const Distribution& demand,
                           const TransportPlan& plan) {
  const RationalMatrix& joint = plan.plan.joint();
  if (!is_coupling_of(joint, supply, demand)) return false;
  if (plan_cost(cost, joint) != plan.cost) return false;
  return potentials_certify(cost, supply, demand, joint, plan.cost, plan.source_potential, plan.target_potential);
}

}  // namespace liftlab
