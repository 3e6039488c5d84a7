#include "helpers.hpp"

#include "liftlab/random_instances.hpp"
#include "liftlab/spaces.hpp"

#include <algorithm>

#include <doctest.h>

using namespace liftlab;
using testing::q;

TEST_CASE("discrete metric is valid") {
  CHECK(validate(discrete_space({"a", "b", "c"})).valid());
}

TEST_CASE("triangle violation is reported with its witness") {
  const auto d = testing::space({{"0", "1/4", "1"}, {"1/4", "0", "1/4"}, {"1", "1/4", "0"}});
  const ValidationReport r = validate(d);
  REQUIRE_FALSE(r.valid());
  const bool found = std::any_of(r.violations.begin(), r.violations.end(), [](const AxiomViolation& v) {
    return v.axiom == Axiom::triangle && v.x == 0 && v.y == 1 && v.z == 2;
  });
  CHECK(found);
  CHECK_THROWS_AS(require_pseudometric(d), ValidationError);
}

TEST_CASE("asymmetry, reflexivity and range violations") {
  const auto asym = testing::space({{"0", "1/2"}, {"1/3", "0"}});
  const auto r = validate(asym);
  CHECK(std::any_of(r.violations.begin(), r.violations.end(), [](const AxiomViolation& v) {
    return v.axiom == Axiom::symmetry;
  }));
  const auto refl = testing::space({{"1/2", "1/2"}, {"1/2", "0"}});
  const auto r2 = validate(refl);
  CHECK(std::any_of(r2.violations.begin(), r2.violations.end(), [](const AxiomViolation& v) {
    return v.axiom == Axiom::reflexivity;
  }));
  const auto big = testing::space({{"0", "2"}, {"2", "0"}});
  const auto r3 = validate(big);
  CHECK(std::any_of(r3.violations.begin(), r3.violations.end(), [](const AxiomViolation& v) {
    return v.axiom == Axiom::range;
  }));
}

TEST_CASE("make_space checks the shape") {
  CHECK_THROWS_AS(make_space({"a", "b"}, RationalMatrix(3, 3)), ValidationError);
}

TEST_CASE("quotient of a metric space is a bijection") {
  const auto d = discrete_space({"a", "b", "c"});
  const MetricQuotient m = metric_quotient(d);
  CHECK(m.space.size() == 3);
  CHECK(m.projection == std::vector<std::size_t>{0, 1, 2});
  CHECK(m.space.d == d.d);
}

TEST_CASE("points at distance zero collapse") {
  const auto d = testing::space({{"0", "0", "1/2"}, {"0", "0", "1/2"}, {"1/2", "1/2", "0"}});
  const MetricQuotient m = metric_quotient(d);
  REQUIRE(m.space.size() == 2);
  CHECK(m.projection == std::vector<std::size_t>{0, 0, 1});
  CHECK(m.representative == std::vector<std::size_t>{0, 2});
  CHECK(m.space.d(0, 1) == q("1/2"));
  CHECK(m.space.points[0] == "p0");
}

TEST_CASE("quotient is idempotent and separated") {
  InstanceGenerator gen(3);
  for (int i = 0; i < 50; ++i) {
    const auto d = gen.pseudometric(gen.index(2, 6), 12, true);
    const MetricQuotient once = metric_quotient(d);
    const MetricQuotient twice = metric_quotient(once.space);
    CHECK(twice.space.d == once.space.d);
    CHECK(validate(once.space).valid());
    for (std::size_t a = 0; a < once.space.size(); ++a) {
      for (std::size_t b = 0; b < once.space.size(); ++b) {
        if (a != b) CHECK(once.space.d(a, b) > 0);
      }
    }
    for (std::size_t x = 0; x < d.size(); ++x) {
      for (std::size_t y = 0; y < d.size(); ++y) {
        CHECK(once.space.d(once.projection[x], once.projection[y]) == d.d(x, y));
      }
    }
  }
}

TEST_CASE("epsilon expansion") {
  const auto d = discrete_space({"a", "b", "c"});
  const PointSet a{0};
  CHECK(epsilon_expansion(d, a, Rational(1)) == PointSet{0, 1, 2});
  CHECK(epsilon_expansion(d, a, Rational(0)) == a);
  CHECK(epsilon_expansion(d, a, q("1/2")) == a);
  const auto line = testing::space({{"0", "1/4", "1/2"}, {"1/4", "0", "1/4"}, {"1/2", "1/4", "0"}});
  CHECK(epsilon_expansion(line, a, q("1/4")) == PointSet{0, 1});
}

TEST_CASE("expansion is monotone in the set and the radius") {
  InstanceGenerator gen(4);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = gen.index(1, 5);
    const auto d = gen.pseudometric(n);
    const PointSet a = gen.point_set(n);
    PointSet b = a;
    b.push_back(gen.index(0, n - 1));
    b = make_point_set(b, n);
    const Rational e1 = gen.unit();
    const Rational e2 = std::max(e1, gen.unit());
    const PointSet small = epsilon_expansion(d, a, e1);
    const PointSet large = epsilon_expansion(d, a, e2);
    CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
    const PointSet grown = epsilon_expansion(d, b, e1);
    CHECK(std::includes(grown.begin(), grown.end(), small.begin(), small.end()));
    CHECK(std::includes(small.begin(), small.end(), a.begin(), a.end()));
  }
}

TEST_CASE("crisp threshold includes the boundary") {
  const auto r = testing::relation({{"0", "1/2"}, {"1/3", "1"}});
  const CrispRelation zero = crisp_threshold(r, Rational(0));
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) CHECK(zero.holds(x, y));
  }
  const CrispRelation above = crisp_threshold(r, q("101/100"));
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) CHECK_FALSE(above.holds(x, y));
  }
  const CrispRelation half = crisp_threshold(r, q("1/2"));
  CHECK(half.holds(0, 1));
  CHECK_FALSE(half.holds(1, 0));
  CHECK(half.holds(1, 1));
}

TEST_CASE("threshold is antitone") {
  InstanceGenerator gen(5);
  for (int i = 0; i < 50; ++i) {
    const auto r = gen.relation(gen.index(1, 4), gen.index(1, 4));
    const Rational e1 = gen.unit();
    const Rational e2 = std::max(e1, gen.unit());
    const auto a = crisp_threshold(r, e1);
    const auto b = crisp_threshold(r, e2);
    for (std::size_t x = 0; x < r.sources.size(); ++x) {
      for (std::size_t y = 0; y < r.targets.size(); ++y) CHECK(b.relation().r(x, y) <= a.relation().r(x, y));
    }
  }
}

TEST_CASE("crisp relations reject fuzzy entries") {
  CHECK_THROWS_AS(CrispRelation(testing::relation({{"1/2"}})), ValidationError);
}
