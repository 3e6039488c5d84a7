#include "liftlab/spaces.hpp"

#include <algorithm>

namespace liftlab {

std::size_t PseudometricSpace::index_of(const std::string& name) const {
  auto it = std::find(points.begin(), points.end(), name);
  if (it == points.end()) throw ValidationError("unknown point \"" + name + "\"");
  return static_cast<std::size_t>(it - points.begin());
}

FuzzyPredicate FuzzyRelation::flatten() const { return FuzzyPredicate(r.data()); }

CrispRelation::CrispRelation(FuzzyRelation relation) : relation_(std::move(relation)) {
  for (const auto& v : relation_.r.data()) {
    if (v != 0 && v != 1) throw ValidationError("crisp relation entry " + to_string(v) + " is not 0 or 1");
  }
}

FuzzyRelation as_relation(const PseudometricSpace& space) { return {space.points, space.points, space.d}; }

PseudometricSpace make_space(std::vector<std::string> points, RationalMatrix d) {
  if (d.rows() != points.size() || d.cols() != points.size()) {
    throw ValidationError("distance matrix must be " + std::to_string(points.size()) + "x" +
                          std::to_string(points.size()));
  }
  return {std::move(points), std::move(d)};
}

PseudometricSpace discrete_space(std::vector<std::string> points) {
  const std::size_t n = points.size();
  RationalMatrix d(n, n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) d(i, i) = 0;
  return {std::move(points), std::move(d)};
}

void check_relation(const FuzzyRelation& r) {
  if (r.r.rows() != r.sources.size() || r.r.cols() != r.targets.size()) {
    throw ValidationError("relation matrix shape does not match its source/target lists");
  }
  for (const auto& v : r.r.data()) {
    if (v < 0 || v > 1) throw ValidationError("relation entry " + to_string(v) + " outside [0,1]");
  }
}

ValidationReport validate(const PseudometricSpace& space) {
  ValidationReport report;
  const std::size_t n = space.size();
  const auto& d = space.d;
  if (d.rows() != n || d.cols() != n) {
    report.violations.push_back({Axiom::range, 0, 0, 0, "distance matrix shape does not match point list"});
    return report;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (d(x, y) < 0 || d(x, y) > 1) {
        report.violations.push_back({Axiom::range, x, y, 0,
                                     "d(" + space.points[x] + "," + space.points[y] + ") = " +
                                         to_string(d(x, y)) + " outside [0,1]"});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (d(x, x) != 0) {
      report.violations.push_back(
          {Axiom::reflexivity, x, x, 0, "d(" + space.points[x] + "," + space.points[x] + ") != 0"});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (d(x, y) != d(y, x)) {
        report.violations.push_back(
            {Axiom::symmetry, x, y, 0, "d(" + space.points[x] + "," + space.points[y] + ") != d(" +
                                           space.points[y] + "," + space.points[x] + ")"});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (d(x, z) > d(x, y) + d(y, z)) {
          report.violations.push_back({Axiom::triangle, x, y, z,
                                       "d(" + space.points[x] + "," + space.points[z] + ") > d(" +
                                           space.points[x] + "," + space.points[y] + ") + d(" +
                                           space.points[y] + "," + space.points[z] + ")"});
        }
      }
    }
  }
  return report;
}

void require_pseudometric(const PseudometricSpace& space) {
  const auto report = validate(space);
  if (!report.valid()) throw ValidationError("not a pseudometric: " + report.violations.front().message);
}

MetricQuotient metric_quotient(const PseudometricSpace& space) {
  const std::size_t n = space.size();
  MetricQuotient q;
  q.projection.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (q.projection[x] != n) continue;
    const std::size_t cls = q.representative.size();
    q.representative.push_back(x);
    for (std::size_t y = x; y < n; ++y) {
      if (q.projection[y] == n && space.d(x, y) == 0) q.projection[y] = cls;
    }
  }
  const std::size_t k = q.representative.size();
  q.space.points.reserve(k);
  q.space.d = RationalMatrix(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    q.space.points.push_back(space.points[q.representative[a]]);
    for (std::size_t b = 0; b < k; ++b) q.space.d(a, b) = space.d(q.representative[a], q.representative[b]);
  }
  return q;
}

PointSet epsilon_expansion(const PseudometricSpace& space, const PointSet& set, const Rational& epsilon) {
  if (epsilon < 0) throw ValidationError("expansion radius must be nonnegative");
  PointSet out;
  for (std::size_t y = 0; y < space.size(); ++y) {
    for (std::size_t x : set) {
      if (space.d(x, y) <= epsilon) {
        out.push_back(y);
        break;
      }
    }
  }
  return out;
}

CrispRelation crisp_threshold(const FuzzyRelation& r, const Rational& epsilon) {
  if (epsilon < 0) throw ValidationError("threshold must be nonnegative");
  FuzzyRelation out{r.sources, r.targets, RationalMatrix(r.r.rows(), r.r.cols())};
  for (std::size_t x = 0; x < r.r.rows(); ++x) {
    for (std::size_t y = 0; y < r.r.cols(); ++y) out.r(x, y) = r.r(x, y) >= epsilon ? 1 : 0;
  }
  return CrispRelation(std::move(out));
}

}  // namespace liftlab
