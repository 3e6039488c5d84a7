#include "liftlab/levy_prokhorov.hpp"

#include "liftlab/guards.hpp"
#include "liftlab/transport.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace liftlab {

namespace {

using Mask = std::uint64_t;

// max over A within supp(from) of from(A) - to(A_eps), with A_eps the union of
// the eps-balls around A's points.
Rational worst_subset(const PseudometricSpace& space, const Distribution& from, const Distribution& to,
                      const Rational& eps) {
  const std::size_t n = space.size();
  const PointSet support = from.support();
  std::vector<Mask> ball(support.size(), 0);
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t y = 0; y < n; ++y) {
      if (space.d(support[i], y) <= eps) ball[i] |= Mask{1} << y;
    }
  }
  Rational best(0);
  const Mask subsets = Mask{1} << support.size();
  for (Mask a = 1; a < subsets; ++a) {
    Mask expanded = 0;
    Rational gain;
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (a >> i & 1) {
        expanded |= ball[i];
        gain += from[support[i]];
      }
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (expanded >> y & 1) gain -= to[y];
    }
    best = std::max(best, gain);
  }
  return best;
}

void support_guard(const Distribution& mu) {
  const std::size_t limit = guard_limits().lp_direct_support;
  const std::size_t size = mu.support().size();
  if (size > limit) {
    throw GuardError("subset enumeration refuses a support of " + std::to_string(size) + " points (limit " +
                     std::to_string(limit) + ")");
  }
}

std::string dump(const FuzzyPredicate& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << to_string(f[i]);
  return out.str();
}

}  // namespace

Rational lp_direct(const PseudometricSpace& space, const Distribution& mu, const Distribution& nu, bool symmetrized) {
  require_pseudometric(space);
  if (mu.size() != space.size() || nu.size() != space.size()) {
    throw ValidationError("distributions and space have different carriers");
  }
  if (space.size() > 64) throw GuardError("subset enumeration supports at most 64 points");
  support_guard(mu);
  if (symmetrized) support_guard(nu);

  std::vector<Rational> levels(space.d.data().begin(), space.d.data().end());
  levels.push_back(Rational(0));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // Expansions are constant on [v_i, v_{i+1}); the condition eps >= h(eps)
  // is upward closed, so the first segment that contains a solution wins.
  for (std::size_t i = 0; i < levels.size(); ++i) {
    Rational h = worst_subset(space, mu, nu, levels[i]);
    if (symmetrized) h = std::max(h, worst_subset(space, nu, mu, levels[i]));
    const Rational candidate = std::max(levels[i], h);
    if (i + 1 == levels.size() || candidate < levels[i + 1]) return candidate;
  }
  throw InternalError("no threshold satisfies the subset condition");
}

LiftedValue ky_fan(const FuzzyRelation& r, const Distribution& mu, const Distribution& nu) {
  return wasserstein(Modality::generally(), r, mu, nu);
}

CrispPricePair crisp_price_pair(const CrispRelation& r, const Distribution& mu, const Distribution& nu) {
  const RationalMatrix& cost = r.relation().r;
  if (mu.size() != cost.rows() || nu.size() != cost.cols()) {
    throw ValidationError("distributions do not match the relation's shape");
  }
  const TransportPlan plan = solve_transport(cost, mu, nu);
  const auto& f = plan.source_potential;
  const auto& g = plan.target_potential;
  const std::size_t nx = mu.size();
  const std::size_t ny = nu.size();

  std::vector<bool> x_tight(nx, false);
  std::vector<bool> y_tight(ny, false);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      if (g[y] - f[x] == cost(x, y)) x_tight[x] = y_tight[y] = true;
    }
  }
  // Isolated vertices carry no mass (every plan cell sits on a tight edge).
  // The others have potentials within [m, m + 1], m the least source value,
  // so thresholding at some t in (m, m + 1] keeps the margin at least W.
  std::optional<Rational> m;
  for (std::size_t x = 0; x < nx; ++x) {
    if (x_tight[x] && (!m || f[x] < *m)) m = f[x];
  }
  if (!m) throw InternalError("transport plan has no tight edge");
  std::vector<Rational> thresholds{*m + 1};
  for (std::size_t x = 0; x < nx; ++x) {
    if (x_tight[x] && f[x] > *m && f[x] <= *m + 1) thresholds.push_back(f[x]);
  }
  for (std::size_t y = 0; y < ny; ++y) {
    if (y_tight[y] && g[y] > *m && g[y] <= *m + 1) thresholds.push_back(g[y]);
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  std::optional<CrispPricePair> best;
  for (const auto& t : thresholds) {
    std::vector<Rational> p(nx);
    std::vector<Rational> q(ny);
    for (std::size_t x = 0; x < nx; ++x) p[x] = !x_tight[x] || f[x] >= t ? 1 : 0;
    for (std::size_t y = 0; y < ny; ++y) q[y] = y_tight[y] && g[y] >= t ? 1 : 0;
    CrispPricePair pair{FuzzyPredicate(std::move(p)), FuzzyPredicate(std::move(q)), Rational(0), plan.cost};
    pair.margin = expectation(nu, pair.q) - expectation(mu, pair.p);
    if (!best || pair.margin > best->margin) best = std::move(pair);
  }
  if (!verify_crisp_price_pair(r, mu, nu, *best)) {
    throw InternalError("crisp price pair failed its checks: p = [" + dump(best->p) + "], q = [" + dump(best->q) +
                        "], margin " + to_string(best->margin) + ", transport cost " + to_string(plan.cost));
  }
  return *best;
}

bool verify_crisp_price_pair(const CrispRelation& r, const Distribution& mu, const Distribution& nu,
                             const CrispPricePair& pair) {
  auto binary = [](const FuzzyPredicate& h) {
    return std::all_of(h.values().begin(), h.values().end(), [](const Rational& v) { return v == 0 || v == 1; });
  };
  if (!binary(pair.p) || !binary(pair.q)) return false;
  if (!is_nonexpansive_pair(r.relation(), {pair.p, pair.q})) return false;
  const Rational margin = expectation(nu, pair.q) - expectation(mu, pair.p);
  const Rational cost = solve_transport(r.relation().r, mu, nu).cost;
  return margin == pair.margin && margin >= cost;
}

DualityWitness duality_witness(const FuzzyRelation& r, const Distribution& mu, const Distribution& nu,
                               const Rational& epsilon) {
  const Rational distance = exact_value(ky_fan(r, mu, nu).value);
  if (epsilon <= 0 || epsilon >= distance) {
    throw ValidationError("duality witness needs 0 < epsilon < " + to_string(distance) + ", got " +
                          to_string(epsilon));
  }
  DualityWitness w;
  w.epsilon = epsilon;
  w.crisp = crisp_price_pair(crisp_threshold(r, epsilon), mu, nu);
  w.a = expectation(mu, w.crisp.p);
  std::vector<Rational> f(mu.size());
  std::vector<Rational> g(nu.size());
  for (std::size_t x = 0; x < f.size(); ++x) f[x] = w.a + epsilon * w.crisp.p[x];
  for (std::size_t y = 0; y < g.size(); ++y) g[y] = w.a + epsilon * w.crisp.q[y];
  w.pair = {FuzzyPredicate(std::move(f)), FuzzyPredicate(std::move(g))};
  w.margin = eval_generally(w.pair.g, nu) - eval_generally(w.pair.f, mu);
  if (!verify_duality_witness(r, mu, nu, w)) {
    throw InternalError("duality witness failed its checks at epsilon " + to_string(epsilon));
  }
  return w;
}

bool verify_duality_witness(const FuzzyRelation& r, const Distribution& mu, const Distribution& nu,
                            const DualityWitness& w) {
  if (!is_nonexpansive_pair(r, w.pair)) return false;
  const Rational margin = eval_generally(w.pair.g, nu) - eval_generally(w.pair.f, mu);
  return margin == w.margin && margin >= w.epsilon;
}

}  // namespace liftlab
