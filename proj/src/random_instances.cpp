#include "liftlab/random_instances.hpp"

#include <algorithm>

namespace liftlab {

std::size_t InstanceGenerator::index(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

bool InstanceGenerator::coin(double p) { return std::bernoulli_distribution(p)(engine_); }

Rational InstanceGenerator::unit(unsigned max_den) {
  const auto den = static_cast<long>(index(1, max_den));
  const auto num = static_cast<long>(index(0, static_cast<std::size_t>(den)));
  return Rational(num, den);
}

PseudometricSpace InstanceGenerator::pseudometric(std::size_t n, unsigned max_den, bool zero_pair) {
  const auto den = static_cast<long>(index(1, max_den));
  RationalMatrix d(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      // Zero entries are drawn now and then so that non-separated spaces occur.
      const long k = coin(0.1) ? 0 : static_cast<long>(index(1, static_cast<std::size_t>(den)));
      d(x, y) = d(y, x) = Rational(k, den);
    }
  }
  if (zero_pair && n >= 2) {
    const std::size_t x = index(0, n - 1);
    std::size_t y = index(0, n - 2);
    if (y >= x) ++y;
    d(x, y) = d(y, x) = 0;
  }
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) d(x, y) = std::min(d(x, y), Rational(d(x, z) + d(z, y)));
    }
  }
  std::vector<std::string> points;
  for (std::size_t i = 0; i < n; ++i) points.push_back("p" + std::to_string(i));
  return make_space(std::move(points), std::move(d));
}

Distribution InstanceGenerator::distribution(std::size_t n, unsigned max_weight) {
  std::vector<long> w(n);
  long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : w) {
      x = static_cast<long>(index(0, max_weight));
      total += x;
    }
  }
  std::vector<Rational> masses;
  masses.reserve(n);
  for (long x : w) masses.emplace_back(x, total);
  return Distribution::from_masses(std::move(masses));
}

FuzzyRelation InstanceGenerator::relation(std::size_t nx, std::size_t ny, unsigned max_den) {
  FuzzyRelation r;
  for (std::size_t i = 0; i < nx; ++i) r.sources.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < ny; ++i) r.targets.push_back("y" + std::to_string(i));
  r.r = RationalMatrix(nx, ny);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) r.r(x, y) = unit(max_den);
  }
  return r;
}

FuzzyPredicate InstanceGenerator::predicate(std::size_t n, unsigned max_den) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = unit(max_den);
  return FuzzyPredicate(std::move(v));
}

PointSet InstanceGenerator::point_set(std::size_t n) {
  std::vector<std::size_t> members;
  while (members.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (coin()) members.push_back(i);
    }
  }
  return make_point_set(std::move(members), n);
}

ConvexSet InstanceGenerator::convex_set(std::size_t n, std::size_t generators, unsigned max_weight) {
  std::vector<Distribution> gens;
  for (std::size_t j = 0; j < generators; ++j) gens.push_back(distribution(n, max_weight));
  return ConvexSet(std::move(gens));
}

Coalgebra InstanceGenerator::markov_chain(std::size_t n, bool labelled) {
  Coalgebra c;
  c.kind = labelled ? CoalgebraKind::labelled_markov_chain : CoalgebraKind::markov_chain;
  for (std::size_t i = 0; i < n; ++i) {
    c.states.push_back("s" + std::to_string(i));
    c.next.push_back(distribution(n));
    if (labelled) c.output.push_back(unit());
  }
  return c;
}

}  // namespace liftlab
