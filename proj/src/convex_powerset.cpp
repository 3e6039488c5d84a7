#include "liftlab/convex_powerset.hpp"

#include "liftlab/guards.hpp"
#include "liftlab/lp.hpp"
#include "liftlab/transport.hpp"

#include <algorithm>
#include <limits>

namespace liftlab {

ConvexSet::ConvexSet(std::vector<Distribution> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw ValidationError("convex set needs at least one generator");
  const std::size_t n = generators_.front().size();
  for (const auto& g : generators_) {
    if (g.size() != n) throw ValidationError("convex set generators live on different carriers");
  }
}

ConvexSet ConvexSet::deduplicated() const {
  std::vector<Distribution> unique;
  for (const auto& g : generators_) {
    if (std::find(unique.begin(), unique.end(), g) == unique.end()) unique.push_back(g);
  }
  return ConvexSet(std::move(unique));
}

ConvexSet pushforward(std::span<const std::size_t> map, std::size_t target_size, const ConvexSet& set) {
  std::vector<Distribution> gens;
  gens.reserve(set.size());
  for (const auto& g : set.generators()) gens.push_back(pushforward(map, target_size, g));
  return ConvexSet(std::move(gens));
}

namespace {

void check_inputs(const PseudometricSpace& space, const ConvexSet& a, const ConvexSet& b) {
  require_pseudometric(space);
  if (a.carrier_size() != space.size() || b.carrier_size() != space.size()) {
    throw ValidationError("convex sets and space have different carriers");
  }
}

void check_point(const PseudometricSpace& space, const Distribution& mu, const ConvexSet& set) {
  if (mu.size() != space.size() || set.carrier_size() != space.size()) {
    throw ValidationError("distribution, convex set and space have different carriers");
  }
}

DirectionWitness direction(const PseudometricSpace& space, const ConvexSet& from, const ConvexSet& to) {
  DirectionWitness best;
  bool first = true;
  for (std::size_t i = 0; i < from.size(); ++i) {
    PointToSet p = point_to_set_distance(space, from.generators()[i], to);
    if (first || p.value > best.value) {
      best = {i, p.value, std::move(p.coefficients), std::move(p.nearest)};
      first = false;
    }
  }
  return best;
}

// Affine function of the convex weights: terms[0] + sum_j terms[j+1] c_j.
using Affine = std::vector<Rational>;

// Minimum transport cost from mu into conv(to) restricted to couplings
// supported on one spanning tree, or nullopt when no weights make the tree's
// flow nonnegative.
struct TreeOptimum {
  Rational value;
  std::vector<Rational> coefficients;
};

std::optional<TreeOptimum> tree_program(const PseudometricSpace& space, const Distribution& mu, const ConvexSet& to,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& tree) {
  const std::size_t n = space.size();
  const std::size_t k = to.size();
  // Vertices: left l in [0, n), right r as n + r.
  std::vector<std::vector<std::size_t>> incident(2 * n);
  for (std::size_t e = 0; e < tree.size(); ++e) {
    incident[tree[e].first].push_back(e);
    incident[n + tree[e].second].push_back(e);
  }
  std::vector<std::size_t> order;
  std::vector<std::size_t> parent_edge(2 * n, tree.size());
  std::vector<bool> seen(2 * n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (std::size_t e : incident[v]) {
      const std::size_t w = v < n ? n + tree[e].second : tree[e].first;
      if (seen[w]) continue;
      seen[w] = true;
      parent_edge[w] = e;
      stack.push_back(w);
    }
  }
  if (order.size() != 2 * n) throw InternalError("edge set is not a spanning tree");

  std::vector<Affine> weight(tree.size(), Affine(k + 1));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t v = *it;
    if (parent_edge[v] == tree.size()) continue;  // root
    Affine demand(k + 1);
    if (v < n) {
      demand[0] = mu[v];
    } else {
      for (std::size_t j = 0; j < k; ++j) demand[j + 1] = to.generators()[j][v - n];
    }
    for (std::size_t e : incident[v]) {
      if (e == parent_edge[v]) continue;
      for (std::size_t t = 0; t <= k; ++t) demand[t] -= weight[e][t];
    }
    weight[parent_edge[v]] = std::move(demand);
  }

  LinearProgram lp(Sense::minimize);
  for (std::size_t j = 0; j < k; ++j) lp.add_variable("c" + std::to_string(j));
  {
    std::vector<Rational> row(k, Rational(1));
    lp.add_constraint(std::move(row), Relation::equal, Rational(1), "simplex");
  }
  Rational constant;
  std::vector<Rational> objective(k);
  for (std::size_t e = 0; e < tree.size(); ++e) {
    const Affine& w = weight[e];
    const Rational& cost = space.d(tree[e].first, tree[e].second);
    std::vector<Rational> row(w.begin() + 1, w.end());
    const bool constant_only = std::all_of(row.begin(), row.end(), [](const Rational& r) { return r == 0; });
    if (constant_only) {
      if (w[0] < 0) return std::nullopt;
    } else {
      lp.add_constraint(row, Relation::greater_equal, Rational(-w[0]));
    }
    constant += cost * w[0];
    for (std::size_t j = 0; j < k; ++j) objective[j] += cost * w[j + 1];
  }
  lp.set_objective(std::move(objective));
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) return std::nullopt;
  return TreeOptimum{sol.value + constant, sol.assignment};
}

DirectionWitness tree_direction(const PseudometricSpace& space, const ConvexSet& from, const ConvexSet& to,
                                const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& trees) {
  DirectionWitness best;
  bool first = true;
  for (std::size_t i = 0; i < from.size(); ++i) {
    std::optional<TreeOptimum> inner;
    for (const auto& tree : trees) {
      auto t = tree_program(space, from.generators()[i], to, tree);
      if (t && (!inner || t->value < inner->value)) inner = std::move(t);
    }
    if (!inner) throw InternalError("no spanning tree admits a nonnegative flow");
    if (first || inner->value > best.value) {
      best.generator = i;
      best.value = inner->value;
      best.nearest = convex_combine(inner->coefficients, to.generators());
      best.coefficients = std::move(inner->coefficients);
      first = false;
    }
  }
  return best;
}

}  // namespace

bool is_nonexpansive(const PseudometricSpace& space, const FuzzyPredicate& f) {
  if (f.size() != space.size()) return false;
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y = 0; y < f.size(); ++y) {
      if (f[x] - f[y] > space.d(x, y)) return false;
    }
  }
  return true;
}

PointToSet point_to_set_distance(const PseudometricSpace& space, const Distribution& mu, const ConvexSet& set) {
  check_point(space, mu, set);
  const std::size_t n = space.size();
  const std::size_t k = set.size();
  LinearProgram lp(Sense::minimize);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      lp.add_variable("rho" + std::to_string(x) + "_" + std::to_string(y));
      lp.set_objective_coefficient(x * n + y, space.d(x, y));
    }
  }
  for (std::size_t j = 0; j < k; ++j) lp.add_variable("c" + std::to_string(j));
  for (std::size_t x = 0; x < n; ++x) {
    auto row = lp.zero_row();
    for (std::size_t y = 0; y < n; ++y) row[x * n + y] = 1;
    lp.add_constraint(std::move(row), Relation::equal, mu[x]);
  }
  for (std::size_t y = 0; y < n; ++y) {
    auto row = lp.zero_row();
    for (std::size_t x = 0; x < n; ++x) row[x * n + y] = 1;
    for (std::size_t j = 0; j < k; ++j) row[n * n + j] = -set.generators()[j][y];
    lp.add_constraint(std::move(row), Relation::equal, Rational(0));
  }
  {
    auto row = lp.zero_row();
    for (std::size_t j = 0; j < k; ++j) row[n * n + j] = 1;
    lp.add_constraint(std::move(row), Relation::equal, Rational(1));
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) throw InternalError("point-to-set program is not optimal");
  PointToSet result;
  result.value = sol.value;
  result.coefficients.assign(sol.assignment.begin() + static_cast<std::ptrdiff_t>(n * n), sol.assignment.end());
  result.nearest = convex_combine(result.coefficients, set.generators());
  RationalMatrix joint(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) joint(x, y) = sol.assignment[x * n + y];
  }
  result.plan = Coupling::from_joint(std::move(joint), mu, result.nearest);
  return result;
}

Rational generator_only_distance(const PseudometricSpace& space, const Distribution& mu, const ConvexSet& set) {
  check_point(space, mu, set);
  std::optional<Rational> best;
  for (const auto& nu : set.generators()) {
    Rational v = solve_transport(space.d, mu, nu).cost;
    if (!best || v < *best) best = std::move(v);
  }
  return *best;
}

HkResult dhk_composite(const PseudometricSpace& space, const ConvexSet& a, const ConvexSet& b) {
  check_inputs(space, a, b);
  HkResult result;
  result.algorithm = "composite";
  result.a_to_b = direction(space, a, b);
  result.b_to_a = direction(space, b, a);
  result.value = std::max(result.a_to_b->value, result.b_to_a->value);
  return result;
}

std::uint64_t bipartite_spanning_tree_count(std::size_t n) {
  if (n == 0) return 0;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i + 2 < 2 * n; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / n) return std::numeric_limits<std::uint64_t>::max();
    count *= n;
  }
  return count;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> bipartite_spanning_trees(std::size_t n) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> trees;
  if (n == 0) return trees;
  const std::size_t edges = n * n;
  const std::size_t needed = 2 * n - 1;
  std::vector<std::pair<std::size_t, std::size_t>> chosen;

  auto find = [](std::vector<std::size_t>& parent, std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  // Edges are taken in index order; an edge is included only if it joins two
  // components, so every complete selection is acyclic and hence a tree.
  auto recurse = [&](auto&& self, std::size_t next, std::vector<std::size_t> parent) -> void {
    if (chosen.size() == needed) {
      trees.push_back(chosen);
      return;
    }
    if (edges - next < needed - chosen.size()) return;
    const std::size_t l = next / n;
    const std::size_t r = next % n;
    const std::size_t a = find(parent, l);
    const std::size_t b = find(parent, n + r);
    if (a != b) {
      auto joined = parent;
      joined[a] = b;
      chosen.emplace_back(l, r);
      self(self, next + 1, std::move(joined));
      chosen.pop_back();
    }
    self(self, next + 1, std::move(parent));
  };
  std::vector<std::size_t> parent(2 * n);
  for (std::size_t v = 0; v < 2 * n; ++v) parent[v] = v;
  recurse(recurse, 0, std::move(parent));
  return trees;
}

HkResult dhk_spanning_tree(const PseudometricSpace& space, const ConvexSet& a, const ConvexSet& b) {
  check_inputs(space, a, b);
  const std::size_t limit = guard_limits().spanning_tree_points;
  if (space.size() > limit) {
    throw GuardError("spanning-tree algorithm refuses |X| = " + std::to_string(space.size()) + " > " +
                     std::to_string(limit) + ": K_{n,n} has n^(2n-2) = " +
                     std::to_string(bipartite_spanning_tree_count(space.size())) + " spanning trees");
  }
  const auto trees = bipartite_spanning_trees(space.size());
  HkResult result;
  result.algorithm = "spanning-tree";
  result.a_to_b = tree_direction(space, a, b, trees);
  result.b_to_a = tree_direction(space, b, a, trees);
  result.value = std::max(result.a_to_b->value, result.b_to_a->value);
  return result;
}

Rational convex_price_gap(const FuzzyPredicate& f, const ConvexSet& a, const ConvexSet& b) {
  Rational sup_a = expectation(a.generators().front(), f);
  for (const auto& mu : a.generators()) sup_a = std::max(sup_a, expectation(mu, f));
  Rational sup_b = expectation(b.generators().front(), f);
  for (const auto& nu : b.generators()) sup_b = std::max(sup_b, expectation(nu, f));
  return abs(sup_b - sup_a);
}

HkResult dhk_dual(const PseudometricSpace& space, const ConvexSet& a, const ConvexSet& b) {
  check_inputs(space, a, b);
  const std::size_t n = space.size();
  const ConvexSet a0 = a.deduplicated();
  const ConvexSet b0 = b.deduplicated();

  // Nonexpansiveness rows, minus those implied by f in [0,1] (distance 1) or
  // by two strictly shorter hops through a third point.
  std::vector<std::pair<std::size_t, std::size_t>> lipschitz_rows;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || space.d(x, y) >= 1) continue;
      bool implied = false;
      for (std::size_t z = 0; z < n && !implied; ++z) {
        if (z == x || z == y) continue;
        implied = space.d(x, z) > 0 && space.d(z, y) > 0 && space.d(x, z) + space.d(z, y) == space.d(x, y);
      }
      if (!implied) lipschitz_rows.emplace_back(x, y);
    }
  }

  HkResult result;
  result.algorithm = "dual";
  result.value = 0;
  result.dual = FuzzyPredicate::constant(n, Rational(0));
  for (std::size_t i = 0; i < a0.size(); ++i) {
    for (std::size_t j = 0; j < b0.size(); ++j) {
      const Distribution& mu0 = a0.generators()[i];
      const Distribution& nu0 = b0.generators()[j];
      for (int sign : {+1, -1}) {
        LinearProgram lp(Sense::maximize);
        for (std::size_t x = 0; x < n; ++x) lp.add_variable("f" + std::to_string(x), Rational(0), Rational(1));
        for (const auto& [x, y] : lipschitz_rows) {
          auto row = lp.zero_row();
          row[x] = 1;
          row[y] = -1;
          lp.add_constraint(std::move(row), Relation::less_equal, space.d(x, y));
        }
        // mu0 attains sup over A, nu0 attains sup over B.
        for (std::size_t s = 0; s < a0.size(); ++s) {
          if (s == i) continue;
          auto row = lp.zero_row();
          for (std::size_t x = 0; x < n; ++x) row[x] = a0.generators()[s][x] - mu0[x];
          lp.add_constraint(std::move(row), Relation::less_equal, Rational(0));
        }
        for (std::size_t s = 0; s < b0.size(); ++s) {
          if (s == j) continue;
          auto row = lp.zero_row();
          for (std::size_t x = 0; x < n; ++x) row[x] = b0.generators()[s][x] - nu0[x];
          lp.add_constraint(std::move(row), Relation::less_equal, Rational(0));
        }
        std::vector<Rational> objective(n);
        for (std::size_t x = 0; x < n; ++x) {
          objective[x] = sign > 0 ? Rational(nu0[x] - mu0[x]) : Rational(mu0[x] - nu0[x]);
        }
        lp.set_objective(std::move(objective));
        const LpSolution sol = solve_lp(lp);
        if (sol.status != LpStatus::optimal) throw InternalError("dual price program is not optimal");
        if (sol.value > result.value) {
          result.value = sol.value;
          result.dual = FuzzyPredicate(sol.assignment);
        }
      }
    }
  }
  if (!is_nonexpansive(space, *result.dual) || convex_price_gap(*result.dual, a, b) != result.value) {
    throw InternalError("dual price function does not reproduce its value");
  }
  return result;
}

}  // namespace liftlab
