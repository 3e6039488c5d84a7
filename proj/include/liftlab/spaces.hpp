#pragma once

#include "liftlab/distributions.hpp"
#include "liftlab/matrix.hpp"

#include <string>
#include <vector>

namespace liftlab {

/// Finite 1-bounded pseudometric space. Point order is input order.
struct PseudometricSpace {
  std::vector<std::string> points;
  RationalMatrix d;

  std::size_t size() const { return points.size(); }
  std::size_t index_of(const std::string& name) const;
};

/// Fuzzy relation r: X x Y -> [0,1].
struct FuzzyRelation {
  std::vector<std::string> sources;
  std::vector<std::string> targets;
  RationalMatrix r;

  /// Values as a predicate on the row-major product X x Y.
  FuzzyPredicate flatten() const;
};

/// A fuzzy relation whose entries are all 0 or 1.
class CrispRelation {
 public:
  /// Throws ValidationError on an entry outside {0,1}.
  explicit CrispRelation(FuzzyRelation relation);
  const FuzzyRelation& relation() const { return relation_; }
  bool holds(std::size_t x, std::size_t y) const { return relation_.r(x, y) == 1; }

 private:
  FuzzyRelation relation_;
};

FuzzyRelation as_relation(const PseudometricSpace& space);

/// Builds a space after checking the matrix shape; does not check axioms.
PseudometricSpace make_space(std::vector<std::string> points, RationalMatrix d);

/// Discrete metric: 1 between distinct points.
PseudometricSpace discrete_space(std::vector<std::string> points);

/// Checks shape and that every entry lies in [0,1]. Throws ValidationError.
void check_relation(const FuzzyRelation& r);

enum class Axiom { range, reflexivity, symmetry, triangle };

struct AxiomViolation {
  Axiom axiom;
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Every violated pseudometric axiom with a witness.
ValidationReport validate(const PseudometricSpace& space);

/// Throws ValidationError carrying the first violation.
void require_pseudometric(const PseudometricSpace& space);

struct MetricQuotient {
  PseudometricSpace space;               // classes named by their least-index member
  std::vector<std::size_t> projection;   // point -> class
  std::vector<std::size_t> representative;  // class -> least-index member
};

MetricQuotient metric_quotient(const PseudometricSpace& space);

/// {y | min_{x in A} d(x, y) <= epsilon}.
PointSet epsilon_expansion(const PseudometricSpace& space, const PointSet& set, const Rational& epsilon);

/// r^eps(x, y) = 1 iff r(x, y) >= eps.
CrispRelation crisp_threshold(const FuzzyRelation& r, const Rational& epsilon);

}  // namespace liftlab
