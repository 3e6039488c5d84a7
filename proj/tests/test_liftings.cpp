#include "helpers.hpp"
#include "oracles.hpp"

#include "liftlab/liftings.hpp"
#include "liftlab/random_instances.hpp"

#include <doctest.h>

using namespace liftlab;
using testing::dist;
using testing::q;

namespace {

Rational exact(const LiftedValue& v) { return std::get<Rational>(v.value); }

const Distribution kMu = testing::dist({"2/3", "1/3"});
const Distribution kNu = testing::dist({"1/3", "2/3"});

FuzzyRelation constant_relation(std::size_t nx, std::size_t ny, const Rational& c) {
  FuzzyRelation r;
  for (std::size_t x = 0; x < nx; ++x) r.sources.push_back("x" + std::to_string(x));
  for (std::size_t y = 0; y < ny; ++y) r.targets.push_back("y" + std::to_string(y));
  r.r = RationalMatrix(nx, ny);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) r.r(x, y) = c;
  }
  return r;
}

}  // namespace

TEST_CASE("wasserstein on the two-point example") {
  const auto d = discrete_space({"x", "y"});
  const LiftedValue g = wasserstein(Modality::generally(), d, kMu, kNu);
  CHECK(exact(g) == q("1/3"));
  CHECK(g.exactness == Exactness::exact);
  CHECK(verify_lifted_value(Modality::generally(), as_relation(d), kMu, kNu, g));
  const LiftedValue e = wasserstein(Modality::expectation(), d, kMu, kNu);
  CHECK(exact(e) == q("1/3"));
  CHECK(verify_lifted_value(Modality::expectation(), as_relation(d), kMu, kNu, e));
  const LiftedValue p = wasserstein(Modality::p_moment(Rational(2)), d, kMu, kNu);
  CHECK(p.exactness == Exactness::rounded);
  CHECK(abs(to_decimal(p.value) - Decimal(1) / sqrt(Decimal(3))) < decimal_tolerance());
}

TEST_CASE("sup lifting on singletons is the distance") {
  InstanceGenerator gen(41);
  const auto d = gen.pseudometric(4);
  const LiftedValue w = wasserstein(Modality::sup(), d, PointSet{1}, PointSet{3});
  CHECK(exact(w) == d.d(1, 3));
  CHECK(verify_lifted_value(Modality::sup(), as_relation(d), PointSet{1}, PointSet{3}, w));
}

TEST_CASE("inf has no wasserstein lifting") {
  const auto d = discrete_space({"x", "y"});
  CHECK_THROWS_AS(wasserstein(Modality::inf(), d, PointSet{0}, PointSet{1}), ValidationError);
}

TEST_CASE("argument kinds are checked") {
  const auto d = discrete_space({"x", "y"});
  CHECK_THROWS_AS(wasserstein(Modality::expectation(), d, PointSet{0}, kNu), ValidationError);
  CHECK_THROWS_AS(kantorovich(Modality::sup(), d, kMu, kNu), ValidationError);
}

TEST_CASE("kantorovich on Diracs") {
  InstanceGenerator gen(42);
  const auto d = gen.pseudometric(3);
  const Distribution a = Distribution::dirac(3, 0);
  const Distribution b = Distribution::dirac(3, 2);
  const LiftedValue k = kantorovich(Modality::expectation(), d, a, b);
  CHECK(exact(k) == d.d(0, 2));
  const auto& f = std::get<FuzzyPredicate>(k.witness);
  CHECK(abs(f[2] - f[0]) == d.d(0, 2));
  CHECK(verify_lifted_value(Modality::expectation(), as_relation(d), a, b, k));
}

TEST_CASE("kantorovich is reflexive") {
  InstanceGenerator gen(43);
  const auto d = gen.pseudometric(4);
  const Distribution mu = gen.distribution(4);
  for (const Modality m : {Modality::expectation(), Modality::generally(), Modality::p_moment(Rational(2))}) {
    CHECK(to_decimal(kantorovich(m, d, mu, mu).value) == 0);
  }
  const PointSet a = gen.point_set(4);
  CHECK(exact(kantorovich(Modality::sup(), d, a, a)) == 0);
  CHECK(exact(kantorovich(Modality::inf(), d, a, a)) == 0);
}

TEST_CASE("p-moment kantorovich is bounded and reported as a lower bound") {
  const auto d = discrete_space({"x", "y"});
  const LiftedValue k = kantorovich(Modality::p_moment(Rational(2)), d, kMu, kNu);
  CHECK(k.exactness == Exactness::lower_bound);
  CHECK(scalar_less_equal(k.value, Scalar(q("1/3")), decimal_tolerance()));
  REQUIRE(k.upper.has_value());
  CHECK(scalar_less_equal(k.value, *k.upper, decimal_tolerance()));
}

TEST_CASE("relational kantorovich on constant relations") {
  InstanceGenerator gen(44);
  for (int i = 0; i < 20; ++i) {
    const std::size_t nx = gen.index(1, 3);
    const std::size_t ny = gen.index(1, 3);
    const Distribution mu = gen.distribution(nx);
    const Distribution nu = gen.distribution(ny);
    CHECK(exact(kantorovich_relational(Modality::expectation(), constant_relation(nx, ny, Rational(1)), mu, nu)) == 1);
    CHECK(exact(kantorovich_relational(Modality::expectation(), constant_relation(nx, ny, Rational(0)), mu, nu)) == 0);
    CHECK(exact(kantorovich_relational(Modality::generally(), constant_relation(nx, ny, Rational(0)), mu, nu)) == 0);
  }
}

TEST_CASE("relational kantorovich on a pseudometric with equal arguments") {
  InstanceGenerator gen(45);
  const auto d = gen.pseudometric(4);
  const Distribution mu = gen.distribution(4);
  CHECK(exact(kantorovich_relational(Modality::expectation(), as_relation(d), mu, mu)) == 0);
  CHECK(exact(kantorovich_relational(Modality::generally(), as_relation(d), mu, mu)) == 0);
}

TEST_CASE("grid oracle examples") {
  const auto d = discrete_space({"x", "y"});
  const Rational delta = q("1/16");
  const LiftedValue g = kantorovich_grid_oracle(Modality::generally(), d, kMu, kNu, delta);
  CHECK(g.exactness == Exactness::lower_bound);
  CHECK(exact(g) >= q("1/3") - q("1/8"));
  CHECK(exact(g) <= q("1/3"));
  CHECK(exact(kantorovich_grid_oracle(Modality::expectation(), d, kMu, kMu, delta)) == 0);
  CHECK_THROWS_AS(kantorovich_grid_oracle(Modality::expectation(), d, kMu, kNu, q("1/3")), ValidationError);
}

TEST_CASE("grid oracle is within two steps of the exact value") {
  InstanceGenerator gen(46);
  const Rational delta = q("1/8");
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = gen.index(1, 3);
    const auto d = gen.pseudometric(n);
    const Distribution mu = gen.distribution(n);
    const Distribution nu = gen.distribution(n);
    const Rational exact_value = exact(kantorovich(Modality::expectation(), d, mu, nu));
    const Rational grid = exact(kantorovich_grid_oracle(Modality::expectation(), d, mu, nu, delta));
    CHECK(grid <= exact_value);
    CHECK(grid >= exact_value - 2 * delta);
  }
}

TEST_CASE("grid oracle refuses large instances") {
  InstanceGenerator gen(47);
  const auto d = gen.pseudometric(7);
  const Distribution mu = gen.distribution(7);
  CHECK_THROWS_AS(kantorovich_grid_oracle(Modality::expectation(), d, mu, mu, q("1/16")), GuardError);
}

TEST_CASE("expectation duality against brute-force transport") {
  InstanceGenerator gen(48);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = gen.index(1, 4);
    const auto d = gen.pseudometric(n);
    const Distribution mu = gen.distribution(n, 3);
    const Distribution nu = gen.distribution(n, 3);
    const LiftedValue w = wasserstein(Modality::expectation(), d, mu, nu);
    const LiftedValue k = kantorovich(Modality::expectation(), d, mu, nu);
    CHECK(exact(w) == oracle::transport(d.d, mu, nu));
    CHECK(exact(k) == exact(w));
    CHECK(verify_lifted_value(Modality::expectation(), as_relation(d), mu, nu, w));
    CHECK(verify_lifted_value(Modality::expectation(), as_relation(d), mu, nu, k));
  }
}

TEST_CASE("sup duality against the Hausdorff formula") {
  InstanceGenerator gen(49);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = gen.index(1, 5);
    const auto d = gen.pseudometric(n);
    const PointSet a = gen.point_set(n);
    const PointSet b = gen.point_set(n);
    const LiftedValue w = wasserstein(Modality::sup(), d, a, b);
    const LiftedValue k = kantorovich(Modality::sup(), d, a, b);
    CHECK(exact(w) == oracle::hausdorff(d, a, b));
    CHECK(exact(k) == exact(w));
    CHECK(hausdorff(as_relation(d), a, b) == exact(w));
    CHECK(verify_lifted_value(Modality::sup(), as_relation(d), a, b, w));
    CHECK(verify_lifted_value(Modality::sup(), as_relation(d), a, b, k));
  }
}

TEST_CASE("hausdorff with empty sets") {
  const auto r = as_relation(discrete_space({"x", "y"}));
  CHECK(hausdorff(r, {}, {}) == 0);
  CHECK(hausdorff(r, {0}, {}) == 1);
}

TEST_CASE("generally: wasserstein, kantorovich and the subset definition agree") {
  InstanceGenerator gen(50);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = gen.index(1, 4);
    const auto d = gen.pseudometric(n);
    const Distribution mu = gen.distribution(n, 4);
    const Distribution nu = gen.distribution(n, 4);
    const LiftedValue w = wasserstein(Modality::generally(), d, mu, nu);
    const LiftedValue k = kantorovich(Modality::generally(), d, mu, nu);
    const LiftedValue kr = kantorovich_relational(Modality::generally(), as_relation(d), mu, nu);
    CHECK(exact(w) == oracle::lp_distance(d, mu, nu));
    CHECK(exact(k) == exact(w));
    CHECK(exact(kr) == exact(w));
    CHECK(verify_lifted_value(Modality::generally(), as_relation(d), mu, nu, w));
    CHECK(verify_lifted_value(Modality::generally(), as_relation(d), mu, nu, k));
    CHECK(verify_lifted_value(Modality::generally(), as_relation(d), mu, nu, kr));
  }
}

TEST_CASE("relational expectation is the transport cost") {
  InstanceGenerator gen(51);
  for (int i = 0; i < 60; ++i) {
    const std::size_t nx = gen.index(1, 3);
    const std::size_t ny = gen.index(1, 3);
    const auto r = gen.relation(nx, ny);
    const Distribution mu = gen.distribution(nx, 3);
    const Distribution nu = gen.distribution(ny, 3);
    const LiftedValue w = wasserstein(Modality::expectation(), r, mu, nu);
    const LiftedValue k = kantorovich_relational(Modality::expectation(), r, mu, nu);
    CHECK(exact(w) == oracle::transport(r.r, mu, nu));
    CHECK(exact(k) == exact(w));
    CHECK(verify_lifted_value(Modality::expectation(), r, mu, nu, k));
  }
}

TEST_CASE("K <= W for every modality with a wasserstein lifting") {
  InstanceGenerator gen(52);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = gen.index(1, 3);
    const auto d = gen.pseudometric(n);
    const Distribution mu = gen.distribution(n);
    const Distribution nu = gen.distribution(n);
    for (const Modality m : {Modality::expectation(), Modality::generally(), Modality::p_moment(Rational(2))}) {
      CAPTURE(m.name());
      CHECK(scalar_less_equal(kantorovich(m, d, mu, nu).value, wasserstein(m, d, mu, nu).value,
                              decimal_tolerance()));
    }
    const PointSet a = gen.point_set(n);
    const PointSet b = gen.point_set(n);
    CHECK(exact(kantorovich(Modality::sup(), d, a, b)) <= exact(wasserstein(Modality::sup(), d, a, b)));
  }
}

TEST_CASE("tampered witnesses are rejected") {
  const auto d = discrete_space({"x", "y"});
  LiftedValue w = wasserstein(Modality::expectation(), d, kMu, kNu);
  w.value = q("1/4");
  CHECK_FALSE(verify_lifted_value(Modality::expectation(), as_relation(d), kMu, kNu, w));
  LiftedValue k = kantorovich(Modality::expectation(), d, kMu, kNu);
  k.witness = testing::pred({"0", "1"});
  k.value = q("1/3");
  CHECK(verify_lifted_value(Modality::expectation(), as_relation(d), kMu, kNu, k));
  const auto half = make_space({"x", "y"}, testing::space({{"0", "1/2"}, {"1/2", "0"}}).d);
  CHECK_FALSE(verify_lifted_value(Modality::expectation(), as_relation(half), kMu, kNu, k));
}
