#include "helpers.hpp"
#include "oracles.hpp"

#include "liftlab/lp.hpp"
#include "liftlab/random_instances.hpp"
#include "liftlab/transport.hpp"

#include <doctest.h>

using namespace liftlab;
using testing::dist;
using testing::q;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(q("2/4")) == "1/2");
  CHECK(to_string(q("-3")) == "-3");
  CHECK(to_string(q(" 6/3 ")) == "2");
  CHECK(q("+1/3") == Rational(1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("0.5"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/"), ValidationError);
  CHECK_THROWS_AS(parse_rational(""), ValidationError);
  CHECK(to_decimal_string(q("1/3"), 5) == "0.33333");
  CHECK(truncated_add(q("2/3"), q("1/2")) == 1);
  CHECK(truncated_sub(q("1/3"), q("1/2")) == 0);
}

TEST_CASE("large numerators do not overflow") {
  Rational x(1);
  for (int i = 0; i < 40; ++i) x *= Rational(1000003, 999983);
  CHECK(to_string(x).size() > 200);
  CHECK(x / x == 1);
}

TEST_CASE("max x subject to x <= 1") {
  LinearProgram lp(Sense::maximize);
  lp.add_variable("x");
  lp.add_constraint({Rational(1)}, Relation::less_equal, Rational(1));
  lp.set_objective({Rational(1)});
  const LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == 1);
  CHECK(s.assignment[0] == 1);
  CHECK(s.duals.at(0) == 1);
}

TEST_CASE("degenerate optimum max x + y subject to x + y <= 1") {
  LinearProgram lp(Sense::maximize);
  lp.add_variable("x");
  lp.add_variable("y");
  lp.add_constraint({Rational(1), Rational(1)}, Relation::less_equal, Rational(1));
  lp.set_objective({Rational(1), Rational(1)});
  const LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == 1);
  CHECK(is_feasible(lp, s.assignment));
  CHECK(objective_at(lp, s.assignment) == 1);
}

TEST_CASE("empty feasible set is reported as a status") {
  LinearProgram lp(Sense::minimize);
  lp.add_variable("x");
  lp.add_constraint({Rational(1)}, Relation::less_equal, Rational(-1));
  CHECK(solve_lp(lp).status == LpStatus::infeasible);
}

TEST_CASE("unbounded program") {
  LinearProgram lp(Sense::maximize);
  lp.add_variable("x");
  lp.add_variable("y");
  lp.add_constraint({Rational(1), Rational(-1)}, Relation::less_equal, Rational(1));
  lp.set_objective({Rational(1), Rational(0)});
  CHECK(solve_lp(lp).status == LpStatus::unbounded);
}

TEST_CASE("free variables, bounds and equalities") {
  LinearProgram lp(Sense::minimize);
  lp.add_variable("x", std::nullopt);
  lp.add_variable("y", q("1/2"), q("3/2"));
  lp.add_constraint({Rational(1), Rational(1)}, Relation::equal, Rational(0));
  lp.add_constraint({Rational(1), Rational(0)}, Relation::greater_equal, Rational(-1));
  lp.set_objective({Rational(1), Rational(0)});
  const LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == -1);
  CHECK(s.assignment[0] == -1);
  CHECK(s.assignment[1] == 1);
  CHECK(is_feasible(lp, s.assignment));
}

TEST_CASE("duals are shadow prices") {
  // max 3x + 2y s.t. x + y <= 4, x + 3y <= 7, x <= 3
  LinearProgram lp(Sense::maximize);
  lp.add_variable("x");
  lp.add_variable("y");
  lp.add_constraint({Rational(1), Rational(1)}, Relation::less_equal, Rational(4));
  lp.add_constraint({Rational(1), Rational(3)}, Relation::less_equal, Rational(7));
  lp.add_constraint({Rational(1), Rational(0)}, Relation::less_equal, Rational(3));
  lp.set_objective({Rational(3), Rational(2)});
  const LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == 11);
  CHECK(s.duals[0] == 2);
  CHECK(s.duals[1] == 0);
  CHECK(s.duals[2] == 1);
}

TEST_CASE("malformed programs are rejected") {
  LinearProgram lp;
  lp.add_variable("x");
  CHECK_THROWS_AS(lp.add_constraint({Rational(1), Rational(2)}, Relation::equal, Rational(0)), ValidationError);
  CHECK_THROWS_AS(lp.set_objective({}), ValidationError);
  LinearProgram bad;
  bad.add_variable("x", Rational(2), Rational(1));
  CHECK_THROWS_AS(solve_lp(bad), ValidationError);
}

TEST_CASE("transport on the two-point example costs 1/3") {
  const auto d = discrete_space({"x", "y"});
  const TransportPlan p = solve_transport(d.d, dist({"2/3", "1/3"}), dist({"1/3", "2/3"}));
  CHECK(p.cost == Rational(1, 3));
  CHECK(verify_transport_plan(d.d, dist({"2/3", "1/3"}), dist({"1/3", "2/3"}), p));
}

TEST_CASE("equal marginals cost nothing") {
  InstanceGenerator gen(7);
  const auto d = gen.pseudometric(4);
  const Distribution mu = Distribution::dirac(4, 2);
  const TransportPlan p = solve_transport(d.d, mu, mu);
  CHECK(p.cost == 0);
  CHECK(p.plan.joint()(2, 2) == 1);
}

TEST_CASE("Dirac to Dirac costs the cell") {
  InstanceGenerator gen(8);
  const auto d = gen.pseudometric(3);
  const TransportPlan p = solve_transport(d.d, Distribution::dirac(3, 0), Distribution::dirac(3, 2));
  CHECK(p.cost == d.d(0, 2));
}

TEST_CASE("transport rejects mismatched shapes") {
  const auto d = discrete_space({"x", "y"});
  CHECK_THROWS_AS(solve_transport(d.d, dist({"1"}), dist({"1/2", "1/2"})), ValidationError);
}

TEST_CASE("transport matches brute force and certifies itself") {
  InstanceGenerator gen(11);
  for (int i = 0; i < 150; ++i) {
    const std::size_t nx = gen.index(1, 3);
    const std::size_t ny = gen.index(1, 3);
    RationalMatrix cost(nx, ny);
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < ny; ++y) cost(x, y) = gen.unit();
    }
    const Distribution mu = gen.distribution(nx, 2);
    const Distribution nu = gen.distribution(ny, 2);
    const TransportPlan p = solve_transport(cost, mu, nu);
    CHECK(p.cost == oracle::transport(cost, mu, nu));
    CHECK(verify_transport_plan(cost, mu, nu, p));
    Rational dual;
    for (std::size_t y = 0; y < ny; ++y) dual += nu[y] * p.target_potential[y];
    for (std::size_t x = 0; x < nx; ++x) dual -= mu[x] * p.source_potential[x];
    CHECK(dual == p.cost);
    const TransportDual explicit_dual = solve_transport_dual(cost, mu, nu);
    CHECK(explicit_dual.value == p.cost);
  }
}
