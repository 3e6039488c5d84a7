#pragma once

// Brute-force reference computations. They share no code with the library's
// algorithms beyond the basic value types.

#include "liftlab/distributions.hpp"
#include "liftlab/spaces.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

using liftlab::Distribution;
using liftlab::FuzzyPredicate;
using liftlab::PseudometricSpace;
using liftlab::Rational;
using liftlab::RationalMatrix;

inline long lcm_of_denominators(const Distribution& a, const Distribution& b) {
  long l = 1;
  for (const auto* mu : {&a, &b}) {
    for (const auto& m : mu->masses()) {
      const long den = boost::multiprecision::denominator(m).convert_to<long>();
      l = std::lcm(l, den);
    }
  }
  return l;
}

/// Minimum transport cost by enumerating every coupling whose entries are
/// multiples of 1/L, L the lcm of all marginal denominators. The vertices of
/// the transportation polytope lie on that grid.
inline Rational transport(const RationalMatrix& cost, const Distribution& mu, const Distribution& nu) {
  const long l = lcm_of_denominators(mu, nu);
  const std::size_t nx = mu.size();
  const std::size_t ny = nu.size();
  std::vector<long> row(nx);
  std::vector<long> col(ny);
  for (std::size_t x = 0; x < nx; ++x) row[x] = (mu[x] * l).convert_to<long>();
  for (std::size_t y = 0; y < ny; ++y) col[y] = (nu[y] * l).convert_to<long>();
  std::optional<Rational> best;
  std::vector<long> cell(nx * ny, 0);
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == nx * ny) {
      for (long c : col) {
        if (c != 0) return;
      }
      Rational total;
      for (std::size_t i = 0; i < cell.size(); ++i) total += cost(i / ny, i % ny) * Rational(cell[i], l);
      if (!best || total < *best) best = total;
      return;
    }
    const std::size_t x = k / ny;
    const std::size_t y = k % ny;
    if (y == ny - 1) {
      // Last cell of the row takes what is left.
      const long v = row[x];
      if (v > col[y]) return;
      cell[k] = v;
      row[x] -= v;
      col[y] -= v;
      go(k + 1);
      row[x] += v;
      col[y] += v;
      return;
    }
    for (long v = 0; v <= std::min(row[x], col[y]); ++v) {
      cell[k] = v;
      row[x] -= v;
      col[y] -= v;
      go(k + 1);
      row[x] += v;
      col[y] += v;
    }
  };
  go(0);
  return *best;
}

/// Every subset of the carrier as a bitmask.
inline Rational mass(const Distribution& mu, unsigned mask) {
  Rational total;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mask >> i & 1) total += mu[i];
  }
  return total;
}

inline unsigned expand(const PseudometricSpace& d, unsigned mask, const Rational& eps) {
  unsigned out = 0;
  for (std::size_t y = 0; y < d.size(); ++y) {
    for (std::size_t x = 0; x < d.size(); ++x) {
      if ((mask >> x & 1) && d.d(x, y) <= eps) out |= 1u << y;
    }
  }
  return out;
}

inline bool lp_condition(const PseudometricSpace& d, const Distribution& mu, const Distribution& nu,
                         const Rational& eps) {
  const unsigned all = 1u << d.size();
  for (unsigned a = 0; a < all; ++a) {
    if (mass(mu, a) > mass(nu, expand(d, a, eps)) + eps) return false;
  }
  return true;
}

/// inf{eps | mu(A) <= nu(A_eps) + eps for all A} by testing every candidate:
/// the infimum is attained and is either a distance or a value mu(A) - nu(B).
inline Rational lp_distance(const PseudometricSpace& d, const Distribution& mu, const Distribution& nu) {
  std::vector<Rational> candidates(d.d.data().begin(), d.d.data().end());
  const unsigned all = 1u << d.size();
  for (unsigned a = 0; a < all; ++a) {
    for (unsigned b = 0; b < all; ++b) {
      const Rational v = mass(mu, a) - mass(nu, b);
      if (v >= 0) candidates.push_back(v);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& c : candidates) {
    if (lp_condition(d, mu, nu, c)) return c;
  }
  throw std::logic_error("no candidate satisfied the condition");
}

/// inf{eps >= 0 | mu(f > eps) <= eps} by testing candidate values.
inline Rational generally(const FuzzyPredicate& f, const Distribution& mu) {
  std::vector<Rational> candidates{Rational(0)};
  for (std::size_t i = 0; i < f.size(); ++i) candidates.push_back(f[i]);
  const std::vector<Rational> levels = candidates;
  for (const auto& level : levels) {
    Rational above;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] > level) above += mu[i];
    }
    candidates.push_back(above);
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& c : candidates) {
    Rational above;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] > c) above += mu[i];
    }
    if (above <= c) return c;
  }
  throw std::logic_error("no crossing found");
}

/// Hausdorff distance straight from the definition.
inline Rational hausdorff(const PseudometricSpace& d, const std::vector<std::size_t>& a,
                          const std::vector<std::size_t>& b) {
  Rational worst(0);
  for (std::size_t x : a) {
    Rational nearest(1);
    for (std::size_t y : b) nearest = std::min(nearest, d.d(x, y));
    worst = std::max(worst, nearest);
  }
  for (std::size_t y : b) {
    Rational nearest(1);
    for (std::size_t x : a) nearest = std::min(nearest, d.d(x, y));
    worst = std::max(worst, nearest);
  }
  return worst;
}

}  // namespace oracle
