#include "liftlab/distributions.hpp"

#include <algorithm>

namespace liftlab {

PointSet make_point_set(std::vector<std::size_t> indices, std::size_t carrier_size) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (!indices.empty() && indices.back() >= carrier_size) {
    throw ValidationError("point index " + std::to_string(indices.back()) + " outside carrier of size " +
                          std::to_string(carrier_size));
  }
  return indices;
}

Distribution Distribution::from_masses(std::vector<Rational> masses) {
  Rational total;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (masses[i] < 0) throw ValidationError("negative mass at point " + std::to_string(i));
    total += masses[i];
  }
  if (total != 1) throw ValidationError("masses sum to " + to_string(total) + ", expected 1");
  return Distribution(std::move(masses));
}

Distribution Distribution::dirac(std::size_t carrier_size, std::size_t point) {
  if (point >= carrier_size) throw ValidationError("dirac point outside carrier");
  std::vector<Rational> m(carrier_size);
  m[point] = 1;
  return Distribution(std::move(m));
}

Rational Distribution::mass_of(const PointSet& set) const {
  Rational total;
  for (std::size_t i : set) total += mass_.at(i);
  return total;
}

PointSet Distribution::support() const {
  PointSet s;
  for (std::size_t i = 0; i < mass_.size(); ++i) {
    if (mass_[i] != 0) s.push_back(i);
  }
  return s;
}

FuzzyPredicate::FuzzyPredicate(std::vector<Rational> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] > 1) {
      throw ValidationError("predicate value " + to_string(values_[i]) + " at point " + std::to_string(i) +
                            " is outside [0,1]");
    }
  }
}

FuzzyPredicate FuzzyPredicate::constant(std::size_t size, const Rational& c) {
  return FuzzyPredicate(std::vector<Rational>(size, c));
}

FuzzyPredicate FuzzyPredicate::complement() const {
  std::vector<Rational> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1 - values_[i];
  return FuzzyPredicate(std::move(v));
}

FuzzyPredicate truncated_sum(const FuzzyPredicate& f, const FuzzyPredicate& g) {
  if (f.size() != g.size()) throw ValidationError("predicate carrier mismatch");
  std::vector<Rational> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = truncated_add(f[i], g[i]);
  return FuzzyPredicate(std::move(v));
}

bool pointwise_le(const FuzzyPredicate& f, const FuzzyPredicate& g) {
  if (f.size() != g.size()) throw ValidationError("predicate carrier mismatch");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] > g[i]) return false;
  }
  return true;
}

bool is_coupling_of(const RationalMatrix& joint, const Distribution& left, const Distribution& right) {
  if (joint.rows() != left.size() || joint.cols() != right.size()) return false;
  std::vector<Rational> col(right.size());
  for (std::size_t i = 0; i < joint.rows(); ++i) {
    Rational row;
    for (std::size_t j = 0; j < joint.cols(); ++j) {
      if (joint(i, j) < 0) return false;
      row += joint(i, j);
      col[j] += joint(i, j);
    }
    if (row != left[i]) return false;
  }
  for (std::size_t j = 0; j < col.size(); ++j) {
    if (col[j] != right[j]) return false;
  }
  return true;
}

Coupling Coupling::from_joint(RationalMatrix joint, const Distribution& left, const Distribution& right) {
  if (!is_coupling_of(joint, left, right)) throw ValidationError("joint matrix is not a coupling of its marginals");
  Coupling c;
  c.joint_ = std::move(joint);
  c.left_ = left;
  c.right_ = right;
  return c;
}

Distribution Coupling::flatten() const { return Distribution::from_masses(joint_.data()); }

std::vector<std::pair<std::size_t, std::size_t>> Coupling::support() const {
  std::vector<std::pair<std::size_t, std::size_t>> s;
  for (std::size_t i = 0; i < joint_.rows(); ++i) {
    for (std::size_t j = 0; j < joint_.cols(); ++j) {
      if (joint_(i, j) != 0) s.emplace_back(i, j);
    }
  }
  return s;
}

Rational expectation(const Distribution& mu, std::span<const Rational> f) {
  if (mu.size() != f.size()) {
    throw ValidationError("carrier mismatch: distribution has " + std::to_string(mu.size()) +
                          " points, function has " + std::to_string(f.size()));
  }
  Rational total;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (mu[i] != 0 && f[i] != 0) total += mu[i] * f[i];
  }
  return total;
}

Rational expectation(const Distribution& mu, const FuzzyPredicate& f) { return expectation(mu, f.values()); }

Distribution convex_combine(std::span<const Rational> weights, std::span<const Distribution> dists) {
  if (weights.size() != dists.size() || dists.empty()) {
    throw ValidationError("convex combination needs one weight per distribution");
  }
  Rational total;
  for (const auto& w : weights) {
    if (w < 0) throw ValidationError("negative convex weight " + to_string(w));
    total += w;
  }
  if (total != 1) throw ValidationError("convex weights sum to " + to_string(total) + ", expected 1");
  const std::size_t n = dists.front().size();
  std::vector<Rational> mass(n);
  for (std::size_t k = 0; k < dists.size(); ++k) {
    if (dists[k].size() != n) throw ValidationError("convex combination of distributions on different carriers");
    if (weights[k] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) mass[i] += weights[k] * dists[k][i];
  }
  return Distribution::from_masses(std::move(mass));
}

Distribution pushforward(std::span<const std::size_t> map, std::size_t target_size, const Distribution& mu) {
  if (map.size() != mu.size()) throw ValidationError("pushforward map is not total on the carrier");
  std::vector<Rational> mass(target_size);
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= target_size) throw ValidationError("pushforward map leaves the target carrier");
    mass[map[i]] += mu[i];
  }
  return Distribution::from_masses(std::move(mass));
}

}  // namespace liftlab
