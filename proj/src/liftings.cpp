#include "liftlab/liftings.hpp"

#include "liftlab/convex_powerset.hpp"
#include "liftlab/guards.hpp"
#include "liftlab/levy_prokhorov.hpp"
#include "liftlab/lp.hpp"
#include "liftlab/transport.hpp"

#include <algorithm>
#include <functional>

namespace liftlab {

namespace {

const Distribution& need_distribution(const Modality& m, const ModalArgument& arg) {
  if (const auto* mu = std::get_if<Distribution>(&arg)) return *mu;
  throw ValidationError(m.name() + " lifts distributions");
}

const PointSet& need_point_set(const Modality& m, const ModalArgument& arg) {
  if (const auto* a = std::get_if<PointSet>(&arg)) return *a;
  throw ValidationError(m.name() + " lifts point sets");
}

const ConvexSet& need_convex_set(const Modality& m, const ModalArgument& arg) {
  if (const auto* a = std::get_if<ConvexSet>(&arg)) return *a;
  throw ValidationError(m.name() + " lifts convex sets");
}

void check_side(const ModalArgument& arg, std::size_t n, const char* side) {
  if (const auto* mu = std::get_if<Distribution>(&arg)) {
    if (mu->size() != n) throw ValidationError(std::string(side) + " distribution has the wrong carrier size");
  } else if (const auto* a = std::get_if<PointSet>(&arg)) {
    for (std::size_t i : *a) {
      if (i >= n) throw ValidationError(std::string(side) + " point set leaves the carrier");
    }
  } else if (std::get<ConvexSet>(arg).carrier_size() != n) {
    throw ValidationError(std::string(side) + " convex set has the wrong carrier size");
  }
}

void check_shapes(const FuzzyRelation& r, const ModalArgument& s, const ModalArgument& t) {
  check_relation(r);
  check_side(s, r.sources.size(), "source");
  check_side(t, r.targets.size(), "target");
}

Decimal nth_root(const Rational& x, const Rational& p) {
  return boost::multiprecision::pow(to_decimal(x), 1 / to_decimal(p));
}

Scalar difference(const Scalar& a, const Scalar& b) {
  if (is_exact(a) && is_exact(b)) return Rational(std::get<Rational>(a) - std::get<Rational>(b));
  return Decimal(to_decimal(a) - to_decimal(b));
}

Scalar absolute(const Scalar& a) {
  if (const auto* q = std::get_if<Rational>(&a)) return Rational(abs(*q));
  return Decimal(abs(std::get<Decimal>(a)));
}

Scalar truncate_at_zero(const Scalar& a) {
  if (const auto* q = std::get_if<Rational>(&a)) return *q < 0 ? Rational(0) : *q;
  return std::get<Decimal>(a) < 0 ? Decimal(0) : std::get<Decimal>(a);
}

bool scalar_greater(const Scalar& a, const Scalar& b) {
  if (is_exact(a) && is_exact(b)) return std::get<Rational>(a) > std::get<Rational>(b);
  return to_decimal(a) > to_decimal(b);
}

bool scalar_equal(const Scalar& a, const Scalar& b) {
  if (is_exact(a) && is_exact(b)) return std::get<Rational>(a) == std::get<Rational>(b);
  return abs(to_decimal(a) - to_decimal(b)) <= decimal_tolerance();
}

// ---------------------------------------------------------------- wasserstein

LiftedValue wasserstein_expectation(const FuzzyRelation& r, const Distribution& mu, const Distribution& nu) {
  TransportPlan plan = solve_transport(r.r, mu, nu);
  LiftedValue v;
  v.value = plan.cost;
  v.witness = std::move(plan.plan);
  return v;
}

LiftedValue wasserstein_p_moment(const Modality& m, const FuzzyRelation& r, const Distribution& mu,
                                 const Distribution& nu) {
  RationalMatrix cost(r.r.rows(), r.r.cols());
  const bool integral = is_integer(m.p);
  for (std::size_t x = 0; x < cost.rows(); ++x) {
    for (std::size_t y = 0; y < cost.cols(); ++y) {
      if (integral) {
        cost(x, y) = power(r.r(x, y), static_cast<unsigned>(boost::multiprecision::numerator(m.p)));
      } else if (r.r(x, y) != 0) {
        // A 64-digit binary approximation of an irrational power, held exactly.
        const Decimal powered = boost::multiprecision::pow(to_decimal(r.r(x, y)), to_decimal(m.p));
        cost(x, y) = powered.convert_to<Rational>();
      }
    }
  }
  TransportPlan plan = solve_transport(cost, mu, nu);
  LiftedValue v;
  v.witness = std::move(plan.plan);
  if (integral && (m.p == 1 || plan.cost == 0 || plan.cost == 1)) {
    v.value = plan.cost;
  } else {
    v.value = nth_root(plan.cost, m.p);
    v.exactness = Exactness::rounded;
  }
  return v;
}

LiftedValue wasserstein_generally(const FuzzyRelation& r, const Distribution& mu, const Distribution& nu) {
  std::vector<Rational> levels;
  for (const auto& x : r.r.data()) {
    if (x > 0) levels.push_back(x);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // On (v_i, v_{i+1}] the threshold relation is constant; past the last level
  // it is zero and any coupling costs nothing.
  std::optional<Rational> best;
  Coupling best_plan;
  Rational lo(0);
  for (std::size_t i = 0; i <= levels.size(); ++i) {
    TransportPlan plan;
    if (i < levels.size()) {
      plan = solve_transport(crisp_threshold(r, levels[i]).relation().r, mu, nu);
    } else {
      plan = solve_transport(RationalMatrix(mu.size(), nu.size()), mu, nu);
    }
    const Rational candidate = std::max(lo, plan.cost);
    if (!best || candidate < *best) {
      best = candidate;
      best_plan = std::move(plan.plan);
    }
    if (i < levels.size()) lo = levels[i];
  }
  LiftedValue v;
  v.value = *best;
  v.epsilon_star = *best;
  v.witness = std::move(best_plan);
  return v;
}

LiftedValue wasserstein_sup(const FuzzyRelation& r, const PointSet& a, const PointSet& b) {
  LiftedValue v;
  if (a.empty() || b.empty()) {
    v.value = Rational(a.empty() && b.empty() ? 0 : 1);
    if (a.empty() && b.empty()) v.witness = PointCoupling{};
    return v;
  }
  std::vector<Rational> levels;
  for (std::size_t x : a) {
    for (std::size_t y : b) levels.push_back(r.r(x, y));
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (const auto& level : levels) {
    PointCoupling rel;
    std::vector<bool> hit_a(a.size(), false);
    std::vector<bool> hit_b(b.size(), false);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (r.r(a[i], b[j]) <= level) {
          rel.emplace_back(a[i], b[j]);
          hit_a[i] = hit_b[j] = true;
        }
      }
    }
    if (std::all_of(hit_a.begin(), hit_a.end(), [](bool h) { return h; }) &&
        std::all_of(hit_b.begin(), hit_b.end(), [](bool h) { return h; })) {
      v.value = level;
      v.witness = std::move(rel);
      return v;
    }
  }
  throw InternalError("full relation failed to couple the point sets");
}

// ---------------------------------------------------------------- kantorovich

// Price functions on X (and Y unless shared) as LP variables in [0,1].
struct PriceProgram {
  LinearProgram lp{Sense::maximize};
  std::size_t nx = 0;
  std::size_t ny = 0;
  bool shared = false;

  std::size_t f(std::size_t x) const { return x; }
  std::size_t g(std::size_t y) const { return shared ? y : nx + y; }
};

PriceProgram price_program(const FuzzyRelation& r, bool shared) {
  PriceProgram p;
  p.nx = r.sources.size();
  p.ny = r.targets.size();
  p.shared = shared;
  for (std::size_t x = 0; x < p.nx; ++x) p.lp.add_variable("f" + std::to_string(x), Rational(0), Rational(1));
  if (!shared) {
    for (std::size_t y = 0; y < p.ny; ++y) p.lp.add_variable("g" + std::to_string(y), Rational(0), Rational(1));
  }
  for (std::size_t x = 0; x < p.nx; ++x) {
    for (std::size_t y = 0; y < p.ny; ++y) {
      if (shared && x == y) continue;
      if (r.r(x, y) >= 1) continue;  // implied by the [0,1] bounds
      auto row = p.lp.zero_row();
      row[p.g(y)] += 1;
      row[p.f(x)] -= 1;
      p.lp.add_constraint(std::move(row), Relation::less_equal, r.r(x, y));
    }
  }
  return p;
}

struct PriceOptimum {
  Rational value;
  FuzzyPredicate f;
  FuzzyPredicate g;
};

PriceOptimum read_prices(const PriceProgram& p, const LpSolution& sol, const Rational& constant = Rational(0)) {
  if (sol.status != LpStatus::optimal) throw InternalError("price program is not optimal");
  std::vector<Rational> f(sol.assignment.begin(), sol.assignment.begin() + static_cast<std::ptrdiff_t>(p.nx));
  std::vector<Rational> g;
  for (std::size_t y = 0; y < p.ny; ++y) g.push_back(sol.assignment[p.g(y)]);
  return {sol.value + constant, FuzzyPredicate(std::move(f)), FuzzyPredicate(std::move(g))};
}

// max E_t[g] - E_s[f] over price functions.
PriceOptimum expectation_gap(const FuzzyRelation& r, bool shared, const Distribution& s, const Distribution& t) {
  PriceProgram p = price_program(r, shared);
  auto objective = p.lp.zero_row();
  for (std::size_t x = 0; x < p.nx; ++x) objective[p.f(x)] -= s[x];
  for (std::size_t y = 0; y < p.ny; ++y) objective[p.g(y)] += t[y];
  p.lp.set_objective(std::move(objective));
  return read_prices(p, solve_lp(p.lp));
}

// max lambda(g)(T) - lambda(f)(S) for lambda = sup or inf over point sets.
// The outer extreme point is enumerated; the inner one becomes a variable u.
PriceOptimum lattice_gap(const FuzzyRelation& r, bool shared, bool is_sup, const PointSet& s, const PointSet& t) {
  const PointSet& enumerated = is_sup ? t : s;
  std::vector<std::optional<std::size_t>> choices;
  for (std::size_t i : enumerated) choices.emplace_back(i);
  if (choices.empty()) choices.emplace_back(std::nullopt);

  std::optional<PriceOptimum> best;
  for (const auto& choice : choices) {
    PriceProgram p = price_program(r, shared);
    const std::size_t u = p.lp.add_variable("u", Rational(0), Rational(1));
    auto objective = p.lp.zero_row();
    Rational constant;
    if (is_sup) {
      for (std::size_t a : s) {
        auto row = p.lp.zero_row();
        row[p.f(a)] = 1;
        row[u] = -1;
        p.lp.add_constraint(std::move(row), Relation::less_equal, Rational(0));
      }
      objective[u] = -1;
      if (choice) objective[p.g(*choice)] += 1;
    } else {
      for (std::size_t b : t) {
        auto row = p.lp.zero_row();
        row[u] = 1;
        row[p.g(b)] = -1;
        p.lp.add_constraint(std::move(row), Relation::less_equal, Rational(0));
      }
      objective[u] = 1;
      if (choice) {
        objective[p.f(*choice)] -= 1;
      } else {
        constant = -1;
      }
    }
    p.lp.set_objective(std::move(objective));
    PriceOptimum o = read_prices(p, solve_lp(p.lp), constant);
    if (!best || o.value > best->value) best = std::move(o);
  }
  return *best;
}

FuzzyRelation swapped(const FuzzyRelation& r) {
  FuzzyRelation out{r.targets, r.sources, RationalMatrix(r.r.cols(), r.r.rows())};
  for (std::size_t x = 0; x < r.r.rows(); ++x) {
    for (std::size_t y = 0; y < r.r.cols(); ++y) out.r(y, x) = r.r(x, y);
  }
  return out;
}

// Smallest nonexpansive function above g and below f: z -> min_x f(x) + d(x, z).
FuzzyPredicate lipschitz_envelope(const PseudometricSpace& d, const NonexpansivePair& pair) {
  std::vector<Rational> h(d.size());
  for (std::size_t z = 0; z < d.size(); ++z) {
    Rational best = pair.f[z];
    for (std::size_t x = 0; x < d.size(); ++x) best = std::min(best, Rational(pair.f[x] + d.d(x, z)));
    h[z] = best;
  }
  return FuzzyPredicate(std::move(h));
}

std::optional<DualityWitness> generally_witness(const FuzzyRelation& r, const Distribution& mu,
                                                const Distribution& nu, const Rational& value, unsigned depth) {
  // The deepest level gives the tightest margin; shallower ones only shrink eps.
  if (depth == 0) return std::nullopt;
  const Rational eps = value - Rational(1) / power(Rational(2), depth);
  if (eps <= 0) return std::nullopt;
  return duality_witness(r, mu, nu, eps);
}

// ---------------------------------------------------------------- grid oracle

bool is_dyadic_step(const Rational& delta) {
  if (delta <= 0 || delta > 1 || numerator_of(delta) != 1) return false;
  Rational den = denominator_of(delta);
  while (den > 1) {
    if (boost::multiprecision::numerator(den) % 2 != 0) return false;
    den /= 2;
  }
  return true;
}

void grid_guard(std::size_t variables, const Rational& delta) {
  if (!is_dyadic_step(delta)) throw ValidationError("grid step must be 1/2^k, got " + to_string(delta));
  const GuardLimits& limits = guard_limits();
  const auto points = static_cast<std::uint64_t>(boost::multiprecision::numerator(1 / delta)) + 1;
  std::uint64_t candidates = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < variables && !overflow; ++i) {
    if (candidates > limits.grid_candidates / points) overflow = true;
    candidates *= points;
  }
  if (variables > limits.grid_variables || overflow) {
    throw GuardError("grid oracle refuses " + std::to_string(variables) + " variables at step " + to_string(delta) +
                     " (limits: " + std::to_string(limits.grid_variables) + " variables, " +
                     std::to_string(limits.grid_candidates) + " grid points)");
  }
}

LiftedValue grid_search(const Modality& m, const FuzzyRelation& r, bool shared, const ModalArgument& s,
                        const ModalArgument& t, const Rational& delta) {
  const std::size_t nx = r.sources.size();
  const std::size_t ny = r.targets.size();
  grid_guard(shared ? nx : nx + ny, delta);
  const auto steps = static_cast<std::size_t>(boost::multiprecision::numerator(1 / delta));
  std::vector<Rational> grid;
  for (std::size_t k = 0; k <= steps; ++k) grid.push_back(delta * k);

  std::vector<Rational> f(nx);
  std::vector<Rational> g(ny);
  std::optional<Scalar> best;
  NonexpansivePair best_pair;

  auto consider = [&] {
    FuzzyPredicate fp(f);
    FuzzyPredicate gp(shared ? f : g);
    const Scalar low = eval(m, fp, s);
    const Scalar high = eval(m, gp, t);
    const Scalar gap = shared ? absolute(difference(high, low)) : truncate_at_zero(difference(high, low));
    if (!best || scalar_greater(gap, *best)) {
      best = gap;
      best_pair = {std::move(fp), std::move(gp)};
    }
  };
  // g(y) is bounded by min_x f(x) + r(x, y); otherwise free.
  std::function<void(std::size_t)> assign_g = [&](std::size_t y) {
    if (y == ny) {
      consider();
      return;
    }
    Rational cap(1);
    for (std::size_t x = 0; x < nx; ++x) cap = std::min(cap, Rational(f[x] + r.r(x, y)));
    for (const auto& v : grid) {
      if (v > cap) break;
      g[y] = v;
      assign_g(y + 1);
    }
  };
  std::function<void(std::size_t)> assign_f = [&](std::size_t x) {
    if (x == nx) {
      if (shared) {
        consider();
      } else {
        assign_g(0);
      }
      return;
    }
    for (const auto& v : grid) {
      bool ok = true;
      for (std::size_t w = 0; shared && ok && w < x; ++w) ok = abs(v - f[w]) <= r.r(w, x) && abs(v - f[w]) <= r.r(x, w);
      if (!ok) continue;
      f[x] = v;
      assign_f(x + 1);
    }
  };
  assign_f(0);

  LiftedValue out;
  out.value = *best;
  out.exactness = Exactness::lower_bound;
  if (shared) {
    out.witness = best_pair.f;
  } else {
    out.witness = std::move(best_pair);
  }
  return out;
}

}  // namespace

const char* to_string(Exactness e) {
  switch (e) {
    case Exactness::exact:
      return "exact";
    case Exactness::rounded:
      return "rounded";
    case Exactness::lower_bound:
      return "lower_bound";
    case Exactness::upper_bound:
      return "upper_bound";
  }
  return "unknown";
}

bool is_nonexpansive_pair(const FuzzyRelation& r, const NonexpansivePair& pair) {
  if (pair.f.size() != r.sources.size() || pair.g.size() != r.targets.size()) return false;
  for (std::size_t x = 0; x < pair.f.size(); ++x) {
    for (std::size_t y = 0; y < pair.g.size(); ++y) {
      if (pair.g[y] - pair.f[x] > r.r(x, y)) return false;
    }
  }
  return true;
}

Rational hausdorff(const FuzzyRelation& r, const PointSet& a, const PointSet& b) {
  check_relation(r);
  auto directed = [&](const PointSet& from, const PointSet& to, bool forward) {
    Rational worst(0);
    for (std::size_t i : from) {
      Rational nearest(1);
      for (std::size_t j : to) nearest = std::min(nearest, forward ? r.r(i, j) : r.r(j, i));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(a, b, true), directed(b, a, false));
}

LiftedValue wasserstein(const Modality& m, const FuzzyRelation& r, const ModalArgument& s, const ModalArgument& t,
                        const LiftOptions&) {
  m.validate();
  check_shapes(r, s, t);
  switch (m.kind) {
    case ModalityKind::expectation:
      return wasserstein_expectation(r, need_distribution(m, s), need_distribution(m, t));
    case ModalityKind::generally:
      return wasserstein_generally(r, need_distribution(m, s), need_distribution(m, t));
    case ModalityKind::p_moment:
      return wasserstein_p_moment(m, r, need_distribution(m, s), need_distribution(m, t));
    case ModalityKind::sup:
      return wasserstein_sup(r, need_point_set(m, s), need_point_set(m, t));
    case ModalityKind::inf:
      throw ValidationError("the coupling lifting of inf is not supported: inf is not subadditive");
    case ModalityKind::convex_sup_expectation: {
      if (r.sources.size() != r.targets.size()) throw ValidationError("convex sets need a pseudometric space");
      const PseudometricSpace d{r.sources, r.r};
      HkResult hk = dhk_composite(d, need_convex_set(m, s), need_convex_set(m, t));
      LiftedValue v;
      v.value = hk.value;
      return v;
    }
  }
  throw ValidationError("unknown modality");
}

LiftedValue wasserstein(const Modality& m, const PseudometricSpace& d, const ModalArgument& s,
                        const ModalArgument& t, const LiftOptions& options) {
  return wasserstein(m, as_relation(d), s, t, options);
}

LiftedValue kantorovich(const Modality& m, const PseudometricSpace& d, const ModalArgument& s,
                        const ModalArgument& t, const LiftOptions& options) {
  m.validate();
  require_pseudometric(d);
  const FuzzyRelation r = as_relation(d);
  check_shapes(r, s, t);
  LiftedValue v;
  switch (m.kind) {
    case ModalityKind::expectation: {
      const auto& mu = need_distribution(m, s);
      const auto& nu = need_distribution(m, t);
      PriceOptimum up = expectation_gap(r, true, mu, nu);
      PriceOptimum down = expectation_gap(r, true, nu, mu);
      PriceOptimum& best = up.value >= down.value ? up : down;
      v.value = best.value;
      v.witness = std::move(best.f);
      return v;
    }
    case ModalityKind::sup:
    case ModalityKind::inf: {
      const bool is_sup = m.kind == ModalityKind::sup;
      const auto& a = need_point_set(m, s);
      const auto& b = need_point_set(m, t);
      PriceOptimum up = lattice_gap(r, true, is_sup, a, b);
      PriceOptimum down = lattice_gap(r, true, is_sup, b, a);
      PriceOptimum& best = up.value >= down.value ? up : down;
      v.value = best.value;
      v.witness = std::move(best.f);
      return v;
    }
    case ModalityKind::generally: {
      const auto& mu = need_distribution(m, s);
      const auto& nu = need_distribution(m, t);
      // Equal to the coupling value by duality; the witness
      // certifies it from below up to 2^-k.
      const Rational value = exact_value(wasserstein_generally(r, mu, nu).value);
      v.value = value;
      v.margin = Rational(0);
      v.witness = FuzzyPredicate::constant(d.size(), Rational(0));
      if (options.certify && value > 0) {
        if (auto w = generally_witness(r, mu, nu, value, options.witness_depth)) {
          FuzzyPredicate h = lipschitz_envelope(d, w->pair);
          Rational gap = eval_generally(h, nu) - eval_generally(h, mu);
          if (gap < w->epsilon) throw InternalError("envelope of the duality witness lost its margin");
          v.margin = gap;
          v.witness = std::move(h);
        }
      }
      return v;
    }
    case ModalityKind::p_moment: {
      v = kantorovich_grid_oracle(m, d, s, t, options.grid_delta);
      v.upper = wasserstein_p_moment(m, r, need_distribution(m, s), need_distribution(m, t)).value;
      return v;
    }
    case ModalityKind::convex_sup_expectation: {
      HkResult hk = dhk_dual(d, need_convex_set(m, s), need_convex_set(m, t));
      v.value = hk.value;
      v.witness = std::move(*hk.dual);
      return v;
    }
  }
  throw ValidationError("unknown modality");
}

LiftedValue kantorovich_relational(const Modality& m, const FuzzyRelation& r, const ModalArgument& s,
                                   const ModalArgument& t, const LiftOptions& options) {
  m.validate();
  check_shapes(r, s, t);
  LiftedValue v;
  switch (m.kind) {
    case ModalityKind::expectation: {
      PriceOptimum o = expectation_gap(r, false, need_distribution(m, s), need_distribution(m, t));
      v.value = std::max(o.value, Rational(0));
      v.witness = NonexpansivePair{std::move(o.f), std::move(o.g)};
      return v;
    }
    case ModalityKind::sup:
    case ModalityKind::inf: {
      PriceOptimum o = lattice_gap(r, false, m.kind == ModalityKind::sup, need_point_set(m, s), need_point_set(m, t));
      v.value = std::max(o.value, Rational(0));
      v.witness = NonexpansivePair{std::move(o.f), std::move(o.g)};
      return v;
    }
    case ModalityKind::generally: {
      const auto& mu = need_distribution(m, s);
      const auto& nu = need_distribution(m, t);
      const Rational value = exact_value(wasserstein_generally(r, mu, nu).value);
      v.value = value;
      v.margin = Rational(0);
      v.witness = NonexpansivePair{FuzzyPredicate::constant(r.sources.size(), Rational(0)),
                                   FuzzyPredicate::constant(r.targets.size(), Rational(0))};
      if (options.certify && value > 0) {
        if (auto w = generally_witness(r, mu, nu, value, options.witness_depth)) {
          v.margin = w->margin;
          v.witness = std::move(w->pair);
        }
      }
      return v;
    }
    case ModalityKind::p_moment: {
      v = kantorovich_grid_oracle(m, r, s, t, options.grid_delta);
      v.upper = wasserstein_p_moment(m, r, need_distribution(m, s), need_distribution(m, t)).value;
      return v;
    }
    case ModalityKind::convex_sup_expectation:
      throw ValidationError("convex sets are lifted over pseudometrics only");
  }
  throw ValidationError("unknown modality");
}

LiftedValue kantorovich_grid_oracle(const Modality& m, const PseudometricSpace& d, const ModalArgument& s,
                                    const ModalArgument& t, const Rational& delta) {
  m.validate();
  require_pseudometric(d);
  const FuzzyRelation r = as_relation(d);
  check_shapes(r, s, t);
  return grid_search(m, r, true, s, t, delta);
}

LiftedValue kantorovich_grid_oracle(const Modality& m, const FuzzyRelation& r, const ModalArgument& s,
                                    const ModalArgument& t, const Rational& delta) {
  m.validate();
  check_shapes(r, s, t);
  return grid_search(m, r, false, s, t, delta);
}

bool verify_lifted_value(const Modality& m, const FuzzyRelation& r, const ModalArgument& s, const ModalArgument& t,
                         const LiftedValue& v) {
  // Expected witness quality: exact values must be met, certified ones reach the margin.
  auto meets = [&](const Scalar& gap) {
    if (v.margin) return scalar_less_equal(Scalar(*v.margin), gap, decimal_tolerance());
    return scalar_equal(gap, v.value);
  };
  if (const auto* c = std::get_if<Coupling>(&v.witness)) {
    const auto& mu = need_distribution(m, s);
    const auto& nu = need_distribution(m, t);
    if (!is_coupling_of(c->joint(), mu, nu)) return false;
    if (c->joint().rows() != r.r.rows() || c->joint().cols() != r.r.cols()) return false;
    return scalar_equal(eval(m, r.flatten(), c->flatten()), v.value);
  }
  if (const auto* rel = std::get_if<PointCoupling>(&v.witness)) {
    const auto& a = need_point_set(m, s);
    const auto& b = need_point_set(m, t);
    Rational worst(0);
    PointSet left;
    PointSet right;
    for (const auto& [x, y] : *rel) {
      if (!std::binary_search(a.begin(), a.end(), x) || !std::binary_search(b.begin(), b.end(), y)) return false;
      worst = std::max(worst, r.r(x, y));
      left.push_back(x);
      right.push_back(y);
    }
    std::sort(left.begin(), left.end());
    left.erase(std::unique(left.begin(), left.end()), left.end());
    std::sort(right.begin(), right.end());
    right.erase(std::unique(right.begin(), right.end()), right.end());
    return left == a && right == b && scalar_equal(Scalar(worst), v.value);
  }
  if (const auto* f = std::get_if<FuzzyPredicate>(&v.witness)) {
    if (!is_nonexpansive_pair(r, {*f, *f}) || !is_nonexpansive_pair(swapped(r), {*f, *f})) return false;
    return meets(absolute(difference(eval(m, *f, t), eval(m, *f, s))));
  }
  if (const auto* pair = std::get_if<NonexpansivePair>(&v.witness)) {
    if (!is_nonexpansive_pair(r, *pair)) return false;
    return meets(truncate_at_zero(difference(eval(m, pair->g, t), eval(m, pair->f, s))));
  }
  return true;
}

}  // namespace liftlab
