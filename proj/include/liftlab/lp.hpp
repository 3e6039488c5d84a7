#pragma once

#include "liftlab/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace liftlab {

enum class Sense { maximize, minimize };
enum class Relation { less_equal, equal, greater_equal };

struct LpVariable {
  std::string name;
  std::optional<Rational> lower = Rational(0);  // nullopt: unbounded below
  std::optional<Rational> upper;                // nullopt: unbounded above
};

struct LpConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::less_equal;
  Rational bound;
  std::string name;
};

/// A linear program over exact rationals. Variables default to x >= 0.
class LinearProgram {
 public:
  explicit LinearProgram(Sense sense = Sense::maximize) : sense_(sense) {}

  std::size_t add_variable(std::string name, std::optional<Rational> lower = Rational(0),
                           std::optional<Rational> upper = std::nullopt);

  /// A zero coefficient row sized to the current variable count.
  std::vector<Rational> zero_row() const { return std::vector<Rational>(variables_.size()); }

  std::size_t add_constraint(std::vector<Rational> coefficients, Relation relation, Rational bound,
                             std::string name = {});

  void set_objective(std::vector<Rational> coefficients);
  void set_objective_coefficient(std::size_t variable, Rational coefficient);
  void set_sense(Sense sense) { sense_ = sense; }

  Sense sense() const { return sense_; }
  const std::vector<LpVariable>& variables() const { return variables_; }
  const std::vector<LpConstraint>& constraints() const { return constraints_; }
  const std::vector<Rational>& objective() const { return objective_; }

  /// Throws ValidationError when a coefficient vector has the wrong length
  /// or a variable has lower > upper.
  void validate() const;

 private:
  Sense sense_;
  std::vector<LpVariable> variables_;
  std::vector<LpConstraint> constraints_;
  std::vector<Rational> objective_;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> assignment;
  // Shadow prices d(value)/d(bound) of each user constraint, read off the
  // final basis.
  std::vector<Rational> duals;
};

/// Two-phase dense tableau simplex with Bland's rule.
LpSolution solve_lp(const LinearProgram& lp);

/// Independent re-check: bounds and every constraint hold exactly at `x`.
bool is_feasible(const LinearProgram& lp, std::span<const Rational> x);

Rational objective_at(const LinearProgram& lp, std::span<const Rational> x);

const char* to_string(LpStatus status);

}  // namespace liftlab
