#include "liftlab/modalities.hpp"

#include <algorithm>
#include <optional>

namespace liftlab {

Modality Modality::p_moment(Rational p, int digits) {
  Modality m{ModalityKind::p_moment, std::move(p), digits};
  m.validate();
  return m;
}

void Modality::validate() const {
  if (kind != ModalityKind::p_moment) return;
  if (p < 1) throw ValidationError("p_moment exponent must be >= 1, got " + to_string(p));
  if (digits < 12 || digits > kMaxDecimalDigits) {
    throw ValidationError("p_moment precision must be between 12 and " + std::to_string(kMaxDecimalDigits) +
                          " digits");
  }
}

std::string Modality::name() const {
  switch (kind) {
    case ModalityKind::expectation:
      return "expectation";
    case ModalityKind::sup:
      return "sup";
    case ModalityKind::inf:
      return "inf";
    case ModalityKind::generally:
      return "generally";
    case ModalityKind::p_moment:
      return "p_moment(" + to_string(p) + ")";
    case ModalityKind::convex_sup_expectation:
      return "convex_sup_expectation";
  }
  return "unknown";
}

std::size_t carrier_size(const ModalArgument& arg) {
  if (const auto* mu = std::get_if<Distribution>(&arg)) return mu->size();
  if (const auto* a = std::get_if<ConvexSet>(&arg)) return a->carrier_size();
  return 0;
}

namespace {

const Distribution& need_distribution(const Modality& m, const ModalArgument& arg) {
  if (const auto* mu = std::get_if<Distribution>(&arg)) return *mu;
  throw ValidationError(m.name() + " is evaluated on a distribution");
}

void check_carrier(const FuzzyPredicate& f, std::size_t n) {
  if (f.size() != n) {
    throw ValidationError("carrier mismatch: predicate on " + std::to_string(f.size()) + " points, argument on " +
                          std::to_string(n));
  }
}

// Distinct values of f in increasing order.
std::vector<Rational> sorted_values(const FuzzyPredicate& f) {
  std::vector<Rational> v = f.values();
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Rational mass_above(const FuzzyPredicate& f, const Distribution& mu, const Rational& level) {
  Rational total;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] > level) total += mu[i];
  }
  return total;
}

// A constant piece of a step function on [0, inf).
struct Piece {
  Rational lo;
  bool lo_closed = true;
  std::optional<Rational> hi;  // nullopt: unbounded
  bool hi_closed = false;
  Rational value;
};

// eps -> mu({f > eps}): right-continuous, pieces closed on the left.
std::vector<Piece> strict_pieces(const FuzzyPredicate& f, const Distribution& mu) {
  std::vector<Rational> cuts;
  for (const auto& v : sorted_values(f)) {
    if (v > 0) cuts.push_back(v);
  }
  std::vector<Piece> pieces;
  Rational lo(0);
  for (const auto& c : cuts) {
    pieces.push_back({lo, true, c, false, mass_above(f, mu, lo)});
    lo = c;
  }
  pieces.push_back({lo, true, std::nullopt, false, Rational(0)});
  return pieces;
}

// eps -> mu({f >= eps}): left-continuous, pieces closed on the right.
std::vector<Piece> nonstrict_pieces(const FuzzyPredicate& f, const Distribution& mu) {
  std::vector<Rational> cuts;
  for (const auto& v : sorted_values(f)) {
    if (v > 0) cuts.push_back(v);
  }
  std::vector<Piece> pieces;
  pieces.push_back({Rational(0), true, Rational(0), true, Rational(1)});
  Rational lo(0);
  for (const auto& c : cuts) {
    pieces.push_back({lo, false, c, true, mass_above(f, mu, lo)});
    lo = c;
  }
  pieces.push_back({lo, false, std::nullopt, false, Rational(0)});
  return pieces;
}

// inf{eps | S(eps) <= eps}
Rational least_crossing(const std::vector<Piece>& pieces) {
  std::optional<Rational> best;
  for (const auto& p : pieces) {
    const Rational c = std::max(p.lo, p.value);
    bool nonempty;
    if (!p.hi) {
      nonempty = true;
    } else if (c < *p.hi) {
      nonempty = true;
    } else {
      nonempty = c == *p.hi && p.hi_closed && (c > p.lo || p.lo_closed);
    }
    if (nonempty && (!best || c < *best)) best = c;
  }
  return best.value_or(Rational(1));
}

// inf_eps max(S(eps), eps)
Rational inf_max(const std::vector<Piece>& pieces) {
  std::optional<Rational> best;
  for (const auto& p : pieces) {
    const Rational c = std::max(p.lo, p.value);
    if (!best || c < *best) best = c;
  }
  return *best;
}

// sup_eps min(S(eps), eps)
Rational sup_min(const std::vector<Piece>& pieces) {
  Rational best(0);
  for (const auto& p : pieces) {
    const Rational c = p.hi ? std::min(*p.hi, p.value) : p.value;
    if (c > best) best = c;
  }
  return best;
}

// sup{eps | S(eps) >= eps}
Rational greatest_crossing(const std::vector<Piece>& pieces) {
  Rational best(0);
  for (const auto& p : pieces) {
    const Rational c = p.hi ? std::min(*p.hi, p.value) : p.value;
    const bool nonempty = p.lo < c || (p.lo == c && p.lo_closed);
    if (nonempty && c > best) best = c;
  }
  return best;
}

Decimal nth_root(const Decimal& x, const Rational& p) {
  if (x == 0) return x;
  return boost::multiprecision::pow(x, 1 / to_decimal(p));
}

Scalar one_minus(const Scalar& s) {
  if (const auto* q = std::get_if<Rational>(&s)) return Rational(1 - *q);
  return Decimal(1 - std::get<Decimal>(s));
}

}  // namespace

Rational eval_expectation(const FuzzyPredicate& f, const Distribution& mu) {
  check_carrier(f, mu.size());
  return expectation(mu, f);
}

Rational eval_generally(const FuzzyPredicate& f, const Distribution& mu) {
  check_carrier(f, mu.size());
  const std::vector<Rational> values = sorted_values(f);
  // Segment [lo, hi) carries mu({f > lo}); the first crossing with eps wins.
  Rational lo(0);
  for (const auto& hi : values) {
    if (hi <= lo) continue;
    const Rational level = mass_above(f, mu, lo);
    const Rational c = std::max(lo, level);
    if (c < hi) return c;
    lo = hi;
  }
  return lo;
}

Rational generally_two_valued(const Rational& low, const Rational& high, const Rational& mass_at_high) {
  return std::min(high, std::max(low, mass_at_high));
}

Scalar eval_p_moment(const FuzzyPredicate& f, const Distribution& mu, const Rational& p) {
  check_carrier(f, mu.size());
  if (p < 1) throw ValidationError("p_moment exponent must be >= 1");
  if (is_integer(p)) {
    const unsigned k = static_cast<unsigned>(boost::multiprecision::numerator(p));
    Rational moment;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (mu[i] != 0) moment += mu[i] * power(f[i], k);
    }
    if (k == 1 || moment == 0 || moment == 1) return moment;
    return nth_root(to_decimal(moment), p);
  }
  const Decimal exponent = to_decimal(p);
  Decimal moment(0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (mu[i] != 0 && f[i] != 0) moment += to_decimal(mu[i]) * boost::multiprecision::pow(to_decimal(f[i]), exponent);
  }
  return nth_root(moment, p);
}

Scalar eval(const Modality& m, const FuzzyPredicate& f, const ModalArgument& arg) {
  m.validate();
  switch (m.kind) {
    case ModalityKind::expectation:
      return eval_expectation(f, need_distribution(m, arg));
    case ModalityKind::generally:
      return eval_generally(f, need_distribution(m, arg));
    case ModalityKind::p_moment:
      return eval_p_moment(f, need_distribution(m, arg), m.p);
    case ModalityKind::sup:
    case ModalityKind::inf: {
      const auto* set = std::get_if<PointSet>(&arg);
      if (!set) throw ValidationError(m.name() + " is evaluated on a point set");
      const bool is_sup = m.kind == ModalityKind::sup;
      Rational best(is_sup ? 0 : 1);
      for (std::size_t i : *set) {
        if (i >= f.size()) throw ValidationError("point set leaves the predicate's carrier");
        if (is_sup ? f[i] > best : f[i] < best) best = f[i];
      }
      return best;
    }
    case ModalityKind::convex_sup_expectation: {
      const auto* set = std::get_if<ConvexSet>(&arg);
      if (!set) throw ValidationError(m.name() + " is evaluated on a convex set");
      check_carrier(f, set->carrier_size());
      // A linear functional attains its supremum over a hull at a generator.
      Rational best(0);
      for (const auto& mu : set->generators()) best = std::max(best, expectation(mu, f));
      return best;
    }
  }
  throw ValidationError("unknown modality");
}

Scalar dual_eval(const Modality& m, const FuzzyPredicate& f, const ModalArgument& arg) {
  return one_minus(eval(m, f.complement(), arg));
}

std::vector<Rational> GenerallyRepresentations::all() const {
  return {least_crossing_strict,  least_crossing_nonstrict,  inf_max_strict,           inf_max_nonstrict,
          sup_min_strict,         sup_min_nonstrict,         greatest_crossing_strict, greatest_crossing_nonstrict};
}

bool GenerallyRepresentations::agree() const {
  const auto v = all();
  return std::all_of(v.begin(), v.end(), [&](const Rational& x) { return x == v.front(); });
}

GenerallyRepresentations generally_representations(const FuzzyPredicate& f, const Distribution& mu) {
  check_carrier(f, mu.size());
  const auto strict = strict_pieces(f, mu);
  const auto nonstrict = nonstrict_pieces(f, mu);
  GenerallyRepresentations r;
  r.least_crossing_strict = least_crossing(strict);
  r.least_crossing_nonstrict = least_crossing(nonstrict);
  r.inf_max_strict = inf_max(strict);
  r.inf_max_nonstrict = inf_max(nonstrict);
  r.sup_min_strict = sup_min(strict);
  r.sup_min_nonstrict = sup_min(nonstrict);
  r.greatest_crossing_strict = greatest_crossing(strict);
  r.greatest_crossing_nonstrict = greatest_crossing(nonstrict);
  return r;
}

const char* to_string(WellBehavedLaw law) {
  switch (law) {
    case WellBehavedLaw::monotonicity:
      return "monotonicity";
    case WellBehavedLaw::subadditivity:
      return "subadditivity";
    case WellBehavedLaw::zero_preservation:
      return "zero_preservation";
  }
  return "unknown";
}

WellBehavedReport check_well_behaved(const Modality& m, const std::vector<PredicateTriple>& triples) {
  WellBehavedReport report;
  const Decimal tol = decimal_tolerance();
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto& [f, g, arg] = triples[t];
    ++report.checked;
    const Scalar zero = eval(m, FuzzyPredicate::constant(f.size(), Rational(0)), arg);
    if (!scalar_less_equal(zero, Scalar(Rational(0)), tol)) {
      report.violations.push_back({WellBehavedLaw::zero_preservation, t, "lambda(0) = " + to_decimal_string(zero)});
    }
    const Scalar ef = eval(m, f, arg);
    const Scalar eg = eval(m, g, arg);
    if (pointwise_le(f, g) && !scalar_less_equal(ef, eg, tol)) {
      report.violations.push_back({WellBehavedLaw::monotonicity, t,
                                   "f <= g but lambda(f) = " + to_decimal_string(ef) +
                                       " > lambda(g) = " + to_decimal_string(eg)});
    }
    const Scalar sum = eval(m, truncated_sum(f, g), arg);
    Scalar bound;
    if (is_exact(ef) && is_exact(eg)) {
      bound = truncated_add(std::get<Rational>(ef), std::get<Rational>(eg));
    } else {
      Decimal b = to_decimal(ef) + to_decimal(eg);
      bound = b > 1 ? Decimal(1) : b;
    }
    if (!scalar_less_equal(sum, bound, tol)) {
      report.violations.push_back({WellBehavedLaw::subadditivity, t,
                                   "lambda(f (+) g) = " + to_decimal_string(sum) + " > " + to_decimal_string(bound)});
    }
  }
  return report;
}

}  // namespace liftlab
