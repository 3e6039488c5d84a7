#include "helpers.hpp"

#include "liftlab/convex_powerset.hpp"
#include "liftlab/modalities.hpp"
#include "liftlab/random_instances.hpp"
#include "liftlab/transport.hpp"

#include <set>

#include <doctest.h>

using namespace liftlab;
using testing::dist;
using testing::q;

namespace {

struct Hexagon {
  PseudometricSpace space = discrete_space({"x0", "x1", "x2"});
  Distribution mu0 = testing::dist({"1/3", "1/3", "1/3"});
  Distribution mu1 = testing::dist({"2/3", "1/3", "0"});
  Distribution mu2 = testing::dist({"0", "2/3", "1/3"});
  Distribution mu3 = testing::dist({"1/3", "0", "2/3"});
  ConvexSet a{{mu0, mu1}};
  ConvexSet b{{mu2, mu3}};
};

Rational kantorovich_distance(const PseudometricSpace& d, const Distribution& mu, const Distribution& nu) {
  return solve_transport(d.d, mu, nu).cost;
}

}  // namespace

TEST_CASE("point to set distance on the hexagon") {
  const Hexagon h;
  const PointToSet p = point_to_set_distance(h.space, h.mu1, h.b);
  CHECK(p.value == q("1/2"));
  CHECK(p.nearest == dist({"1/6", "1/3", "1/2"}));
  CHECK(kantorovich_distance(h.space, h.mu1, p.nearest) == p.value);
  CHECK(generator_only_distance(h.space, h.mu1, h.b) == q("2/3"));
  CHECK(point_to_set_distance(h.space, h.mu2, h.b).value == 0);
}

TEST_CASE("all three algorithms on the hexagon") {
  const Hexagon h;
  const HkResult c = dhk_composite(h.space, h.a, h.b);
  CHECK(c.value == q("1/2"));
  REQUIRE(c.a_to_b.has_value());
  REQUIRE(c.b_to_a.has_value());
  CHECK(c.a_to_b->value == q("1/2"));
  CHECK(c.b_to_a->value == q("1/3"));
  CHECK(dhk_spanning_tree(h.space, h.a, h.b).value == q("1/2"));
  const HkResult dual = dhk_dual(h.space, h.a, h.b);
  CHECK(dual.value == q("1/2"));
  REQUIRE(dual.dual.has_value());
  CHECK(is_nonexpansive(h.space, *dual.dual));
  CHECK(convex_price_gap(*dual.dual, h.a, h.b) == q("1/2"));
}

TEST_CASE("equal sets and Dirac singletons") {
  InstanceGenerator gen(71);
  const auto d = gen.pseudometric(3);
  const ConvexSet a = gen.convex_set(3, 3);
  CHECK(dhk_composite(d, a, a).value == 0);
  CHECK(dhk_dual(d, a, a).value == 0);
  CHECK(dhk_spanning_tree(d, a, a).value == 0);
  const ConvexSet x({Distribution::dirac(3, 0)});
  const ConvexSet y({Distribution::dirac(3, 2)});
  CHECK(dhk_composite(d, x, y).value == d.d(0, 2));
  CHECK(dhk_spanning_tree(d, x, y).value == d.d(0, 2));
  const HkResult dual = dhk_dual(d, x, y);
  CHECK(dual.value == d.d(0, 2));
  CHECK(abs((*dual.dual)[2] - (*dual.dual)[0]) == d.d(0, 2));
  const auto two = discrete_space({"u", "v"});
  CHECK(dhk_spanning_tree(two, ConvexSet({Distribution::dirac(2, 0)}), ConvexSet({Distribution::dirac(2, 1)})).value ==
        1);
}

TEST_CASE("carriers must match") {
  const auto d = discrete_space({"u", "v"});
  const ConvexSet a({Distribution::dirac(2, 0)});
  const ConvexSet b({Distribution::dirac(3, 0)});
  CHECK_THROWS_AS(dhk_composite(d, a, b), ValidationError);
  CHECK_THROWS_AS(dhk_dual(d, a, b), ValidationError);
  CHECK_THROWS_AS(ConvexSet({Distribution::dirac(2, 0), Distribution::dirac(3, 0)}), ValidationError);
  CHECK_THROWS_AS(ConvexSet(std::vector<Distribution>{}), ValidationError);
}

TEST_CASE("spanning tree enumeration") {
  CHECK(bipartite_spanning_tree_count(1) == 1);
  CHECK(bipartite_spanning_tree_count(2) == 4);
  CHECK(bipartite_spanning_tree_count(3) == 81);
  CHECK(bipartite_spanning_tree_count(100) == UINT64_MAX);
  const auto trees = bipartite_spanning_trees(3);
  CHECK(trees.size() == 81);
  std::set<std::vector<std::pair<std::size_t, std::size_t>>> distinct;
  for (auto t : trees) {
    CHECK(t.size() == 5);
    std::sort(t.begin(), t.end());
    distinct.insert(t);
  }
  CHECK(distinct.size() == 81);
}

TEST_CASE("spanning tree algorithm is guarded") {
  InstanceGenerator gen(72);
  const auto d = gen.pseudometric(5);
  const ConvexSet a = gen.convex_set(5, 2);
  CHECK_THROWS_AS(dhk_spanning_tree(d, a, a), GuardError);
}

TEST_CASE("three algorithms agree on random instances") {
  InstanceGenerator gen(73);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = gen.index(1, 3);
    const auto d = gen.pseudometric(n);
    const ConvexSet a = gen.convex_set(n, gen.index(1, 3));
    const ConvexSet b = gen.convex_set(n, gen.index(1, 3));
    const HkResult c = dhk_composite(d, a, b);
    const HkResult dual = dhk_dual(d, a, b);
    CHECK(dual.value == c.value);
    CHECK(dhk_spanning_tree(d, a, b).value == c.value);
    CHECK(is_nonexpansive(d, *dual.dual));
    CHECK(convex_price_gap(*dual.dual, a, b) == c.value);
    const Rational via_eval = abs(std::get<Rational>(eval(Modality::convex_sup_expectation(), *dual.dual, b)) -
                                  std::get<Rational>(eval(Modality::convex_sup_expectation(), *dual.dual, a)));
    CHECK(via_eval == c.value);
  }
}

TEST_CASE("outer suprema over generators bound sampled hull points") {
  InstanceGenerator gen(74);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = gen.index(2, 4);
    const auto d = gen.pseudometric(n);
    const ConvexSet a = gen.convex_set(n, 3);
    const ConvexSet b = gen.convex_set(n, 3);
    const HkResult c = dhk_composite(d, a, b);
    for (int s = 0; s < 10; ++s) {
      std::vector<Rational> w;
      Rational total;
      for (std::size_t j = 0; j < a.size(); ++j) {
        w.push_back(Rational(gen.index(0, 5)));
        total += w.back();
      }
      if (total == 0) continue;
      for (auto& x : w) x /= total;
      const Distribution mix = convex_combine(w, a.generators());
      CHECK(point_to_set_distance(d, mix, b).value <= c.a_to_b->value);
    }
  }
}

TEST_CASE("distance is unchanged on the metric quotient") {
  InstanceGenerator gen(75);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = gen.index(2, 4);
    const auto d = gen.pseudometric(n, 12, true);
    const ConvexSet a = gen.convex_set(n, 2);
    const ConvexSet b = gen.convex_set(n, 2);
    const MetricQuotient m = metric_quotient(d);
    const ConvexSet qa = pushforward(m.projection, m.space.size(), a);
    const ConvexSet qb = pushforward(m.projection, m.space.size(), b);
    CHECK(dhk_composite(m.space, qa, qb).value == dhk_composite(d, a, b).value);
    CHECK(dhk_dual(m.space, qa, qb).value == dhk_dual(d, a, b).value);
  }
}

TEST_CASE("duplicate generators do not change the distance") {
  const Hexagon h;
  const ConvexSet doubled({h.mu2, h.mu3, h.mu2});
  CHECK(doubled.deduplicated().size() == 2);
  CHECK(dhk_composite(h.space, h.a, doubled).value == q("1/2"));
  CHECK(dhk_dual(h.space, h.a, doubled).value == q("1/2"));
}
