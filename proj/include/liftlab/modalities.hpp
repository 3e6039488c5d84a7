#pragma once

#include "liftlab/convex_set.hpp"
#include "liftlab/distributions.hpp"
#include "liftlab/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace liftlab {

enum class ModalityKind { expectation, sup, inf, generally, p_moment, convex_sup_expectation };

struct Modality {
  ModalityKind kind = ModalityKind::expectation;
  Rational p = Rational(1);          // p_moment exponent, >= 1
  int digits = kDefaultDecimalDigits;  // p_moment report precision, >= 12

  static Modality expectation() { return {ModalityKind::expectation}; }
  static Modality sup() { return {ModalityKind::sup}; }
  static Modality inf() { return {ModalityKind::inf}; }
  static Modality generally() { return {ModalityKind::generally}; }
  static Modality convex_sup_expectation() { return {ModalityKind::convex_sup_expectation}; }
  static Modality p_moment(Rational p, int digits = kDefaultDecimalDigits);

  /// Throws ValidationError if p < 1 or digits outside [12, 60].
  void validate() const;
  std::string name() const;
};

/// What a modality is evaluated on: a distribution, a set of points, or a
/// convex set of distributions.
using ModalArgument = std::variant<Distribution, PointSet, ConvexSet>;

std::size_t carrier_size(const ModalArgument& arg);

/// lambda(f)(arg). Exact except for p_moment with an irrational root.
Scalar eval(const Modality& m, const FuzzyPredicate& f, const ModalArgument& arg);

/// 1 - lambda(1 - f)(arg).
Scalar dual_eval(const Modality& m, const FuzzyPredicate& f, const ModalArgument& arg);

Rational eval_expectation(const FuzzyPredicate& f, const Distribution& mu);

/// inf{eps >= 0 | mu(f > eps) <= eps}, by scanning the step function
/// eps -> mu({f > eps}) over the sorted values of f.
Rational eval_generally(const FuzzyPredicate& f, const Distribution& mu);

Scalar eval_p_moment(const FuzzyPredicate& f, const Distribution& mu, const Rational& p);

/// Closed form for a predicate whose range is exactly {low, high}, low < high:
/// min(high, max(low, mu(f^-1(high)))).
Rational generally_two_valued(const Rational& low, const Rational& high, const Rational& mass_at_high);

/// The four equivalent presentations of the "generally" lifting, each with
/// the strict (f > eps) and non-strict (f >= eps) threshold set.
struct GenerallyRepresentations {
  Rational least_crossing_strict;      // inf{eps | mu(f > eps) <= eps}
  Rational least_crossing_nonstrict;
  Rational inf_max_strict;             // inf_eps max(mu(f > eps), eps)
  Rational inf_max_nonstrict;
  Rational sup_min_strict;             // sup_eps min(mu(f > eps), eps)
  Rational sup_min_nonstrict;
  Rational greatest_crossing_strict;   // sup{eps | mu(f > eps) >= eps}
  Rational greatest_crossing_nonstrict;

  std::vector<Rational> all() const;
  bool agree() const;
};

GenerallyRepresentations generally_representations(const FuzzyPredicate& f, const Distribution& mu);

struct PredicateTriple {
  FuzzyPredicate f;
  FuzzyPredicate g;
  ModalArgument arg;
};

enum class WellBehavedLaw { monotonicity, subadditivity, zero_preservation };

struct LawViolation {
  WellBehavedLaw law;
  std::size_t triple = 0;
  std::string detail;
};

struct WellBehavedReport {
  std::size_t checked = 0;
  std::vector<LawViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Monotonicity (when f <= g), subadditivity and zero preservation on each
/// triple. Decimal values are compared with a 1e-12 tolerance.
WellBehavedReport check_well_behaved(const Modality& m, const std::vector<PredicateTriple>& triples);

const char* to_string(WellBehavedLaw law);

}  // namespace liftlab
