#include "liftlab/lp.hpp"

#include <utility>

namespace liftlab {

std::size_t LinearProgram::add_variable(std::string name, std::optional<Rational> lower,
                                        std::optional<Rational> upper) {
  variables_.push_back({std::move(name), std::move(lower), std::move(upper)});
  objective_.emplace_back(0);
  for (auto& c : constraints_) c.coefficients.emplace_back(0);
  return variables_.size() - 1;
}

std::size_t LinearProgram::add_constraint(std::vector<Rational> coefficients, Relation relation,
                                          Rational bound, std::string name) {
  if (coefficients.size() != variables_.size()) {
    throw ValidationError("constraint has " + std::to_string(coefficients.size()) +
                          " coefficients but the program has " + std::to_string(variables_.size()) +
                          " variables");
  }
  constraints_.push_back({std::move(coefficients), relation, std::move(bound), std::move(name)});
  return constraints_.size() - 1;
}

void LinearProgram::set_objective(std::vector<Rational> coefficients) {
  if (coefficients.size() != variables_.size()) {
    throw ValidationError("objective length does not match the variable count");
  }
  objective_ = std::move(coefficients);
}

void LinearProgram::set_objective_coefficient(std::size_t variable, Rational coefficient) {
  if (variable >= objective_.size()) throw ValidationError("objective index out of range");
  objective_[variable] = std::move(coefficient);
}

void LinearProgram::validate() const {
  if (objective_.size() != variables_.size()) throw ValidationError("objective length mismatch");
  for (const auto& v : variables_) {
    if (v.lower && v.upper && *v.lower > *v.upper) {
      throw ValidationError("variable " + v.name + " has lower bound above upper bound");
    }
  }
  for (const auto& c : constraints_) {
    if (c.coefficients.size() != variables_.size()) {
      throw ValidationError("constraint " + c.name + " has the wrong number of coefficients");
    }
  }
}

namespace {

// One standard-form column feeding an original variable.
struct ColumnRef {
  std::size_t column;
  int sign;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t columns)
      : rows_(rows, std::vector<Rational>(columns + 1)), objective_(columns + 1), basis_(rows), columns_(columns) {}

  Rational& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  Rational& rhs(std::size_t r) { return rows_[r][columns_]; }
  const Rational& rhs(std::size_t r) const { return rows_[r][columns_]; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t columns() const { return columns_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<Rational>& objective_row() const { return objective_; }
  const Rational& objective_value() const { return objective_[columns_]; }

  // Reduced-cost row for maximizing `cost` over the current basis.
  void load_objective(const std::vector<Rational>& cost) {
    for (std::size_t j = 0; j < columns_; ++j) objective_[j] = -cost[j];
    objective_[columns_] = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (rows_[i][j] != 0) objective_[j] += cb * rows_[i][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j <= columns_; ++j) {
      if (prow[j] != 0) {
        prow[j] *= inv;
        nonzero.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c] == 0) return;
      const Rational factor = row[c];
      for (std::size_t j : nonzero) row[j] -= factor * prow[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(objective_);
    basis_[r] = c;
  }

  enum class Outcome { optimal, unbounded };

  // Bland's rule: lowest-index improving column enters; ratio ties leave by
  // lowest basic index.
  Outcome run(std::size_t allowed_columns) {
    for (;;) {
      std::size_t entering = allowed_columns;
      for (std::size_t j = 0; j < allowed_columns; ++j) {
        if (objective_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == allowed_columns) return Outcome::optimal;
      std::size_t leaving = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][entering];
        if (a <= 0) continue;
        Rational ratio = rows_[i][columns_] / a;
        if (leaving == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows_.size()) return Outcome::unbounded;
      pivot(leaving, entering);
    }
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> objective_;
  std::vector<std::size_t> basis_;
  std::size_t columns_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  lp.validate();
  const auto& vars = lp.variables();
  const auto& cons = lp.constraints();

  // Substitute every variable by nonnegative standard columns plus an offset.
  std::vector<std::vector<ColumnRef>> refs(vars.size());
  std::vector<Rational> offset(vars.size());
  std::size_t n_std = 0;
  struct BoundRow {
    std::size_t column;
    Rational bound;
  };
  std::vector<BoundRow> bound_rows;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const auto& v = vars[j];
    if (v.lower) {
      offset[j] = *v.lower;
      refs[j].push_back({n_std, +1});
      if (v.upper) bound_rows.push_back({n_std, *v.upper - *v.lower});
      ++n_std;
    } else if (v.upper) {
      offset[j] = *v.upper;
      refs[j].push_back({n_std++, -1});
    } else {
      refs[j].push_back({n_std++, +1});
      refs[j].push_back({n_std++, -1});
    }
  }

  struct Row {
    std::vector<Rational> a;
    Relation relation;
    Rational b;
    bool flipped = false;
  };
  std::vector<Row> rows;
  rows.reserve(cons.size() + bound_rows.size());
  for (const auto& c : cons) {
    Row row{std::vector<Rational>(n_std), c.relation, c.bound};
    for (std::size_t j = 0; j < vars.size(); ++j) {
      const Rational& a = c.coefficients[j];
      if (a == 0) continue;
      for (const auto& ref : refs[j]) row.a[ref.column] += ref.sign > 0 ? a : Rational(-a);
      row.b -= a * offset[j];
    }
    rows.push_back(std::move(row));
  }
  for (const auto& br : bound_rows) {
    Row row{std::vector<Rational>(n_std), Relation::less_equal, br.bound};
    row.a[br.column] = 1;
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    if (row.b < 0) {
      for (auto& a : row.a) a = -a;
      row.b = -row.b;
      row.flipped = true;
      if (row.relation == Relation::less_equal) {
        row.relation = Relation::greater_equal;
      } else if (row.relation == Relation::greater_equal) {
        row.relation = Relation::less_equal;
      }
    }
  }

  std::size_t n_slack = 0;
  std::size_t n_art = 0;
  for (const auto& row : rows) {
    if (row.relation != Relation::equal) ++n_slack;
    if (row.relation != Relation::less_equal) ++n_art;
  }
  const std::size_t m = rows.size();
  const std::size_t first_art = n_std + n_slack;
  const std::size_t total = first_art + n_art;
  Tableau t(m, total);
  std::vector<std::size_t> unit_column(m);
  {
    std::size_t s = n_std;
    std::size_t a = first_art;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n_std; ++j) t.at(i, j) = rows[i].a[j];
      t.rhs(i) = rows[i].b;
      switch (rows[i].relation) {
        case Relation::less_equal:
          t.at(i, s) = 1;
          unit_column[i] = s++;
          break;
        case Relation::greater_equal:
          t.at(i, s++) = -1;
          t.at(i, a) = 1;
          unit_column[i] = a++;
          break;
        case Relation::equal:
          t.at(i, a) = 1;
          unit_column[i] = a++;
          break;
      }
      t.basis()[i] = unit_column[i];
    }
  }

  LpSolution solution;
  if (n_art > 0) {
    std::vector<Rational> phase1(total);
    for (std::size_t j = first_art; j < total; ++j) phase1[j] = -1;
    t.load_objective(phase1);
    t.run(total);
    if (t.objective_value() < 0) {
      solution.status = LpStatus::infeasible;
      return solution;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis()[i] < first_art) continue;
      for (std::size_t j = 0; j < first_art; ++j) {
        if (t.at(i, j) != 0) {
          t.pivot(i, j);
          break;
        }
      }
    }
  }

  const bool maximize = lp.sense() == Sense::maximize;
  std::vector<Rational> cost(total);
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const Rational& c = lp.objective()[j];
    if (c == 0) continue;
    for (const auto& ref : refs[j]) {
      Rational term = ref.sign > 0 ? c : Rational(-c);
      cost[ref.column] += maximize ? term : Rational(-term);
    }
  }
  t.load_objective(cost);
  if (t.run(first_art) == Tableau::Outcome::unbounded) {
    solution.status = LpStatus::unbounded;
    return solution;
  }

  std::vector<Rational> x_std(total);
  for (std::size_t i = 0; i < m; ++i) x_std[t.basis()[i]] = t.rhs(i);
  solution.status = LpStatus::optimal;
  solution.assignment.resize(vars.size());
  for (std::size_t j = 0; j < vars.size(); ++j) {
    Rational x = offset[j];
    for (const auto& ref : refs[j]) x += ref.sign > 0 ? x_std[ref.column] : Rational(-x_std[ref.column]);
    solution.assignment[j] = std::move(x);
  }
  solution.value = objective_at(lp, solution.assignment);
  solution.duals.resize(cons.size());
  for (std::size_t i = 0; i < cons.size(); ++i) {
    Rational y = t.objective_row()[unit_column[i]];
    if (rows[i].flipped) y = -y;
    solution.duals[i] = maximize ? y : Rational(-y);
  }
  return solution;
}

Rational objective_at(const LinearProgram& lp, std::span<const Rational> x) {
  Rational value;
  for (std::size_t j = 0; j < x.size() && j < lp.objective().size(); ++j) value += lp.objective()[j] * x[j];
  return value;
}

bool is_feasible(const LinearProgram& lp, std::span<const Rational> x) {
  const auto& vars = lp.variables();
  if (x.size() != vars.size()) return false;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    if (vars[j].lower && x[j] < *vars[j].lower) return false;
    if (vars[j].upper && x[j] > *vars[j].upper) return false;
  }
  for (const auto& c : lp.constraints()) {
    Rational lhs;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (c.coefficients[j] != 0) lhs += c.coefficients[j] * x[j];
    }
    switch (c.relation) {
      case Relation::less_equal:
        if (lhs > c.bound) return false;
        break;
      case Relation::equal:
        if (lhs != c.bound) return false;
        break;
      case Relation::greater_equal:
        if (lhs < c.bound) return false;
        break;
    }
  }
  return true;
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal:
      return "optimal";
    case LpStatus::infeasible:
      return "infeasible";
    case LpStatus::unbounded:
      return "unbounded";
  }
  return "unknown";
}

}  // namespace liftlab
