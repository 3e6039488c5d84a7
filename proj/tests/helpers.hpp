#pragma once

#include "liftlab/distributions.hpp"
#include "liftlab/spaces.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace testing {

using liftlab::Distribution;
using liftlab::FuzzyPredicate;
using liftlab::Rational;

inline Rational q(const char* text) { return liftlab::parse_rational(text); }

inline std::vector<Rational> qs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(q(s));
  return out;
}

inline Distribution dist(std::initializer_list<const char*> masses) { return Distribution::from_masses(qs(masses)); }

inline FuzzyPredicate pred(std::initializer_list<const char*> values) { return FuzzyPredicate(qs(values)); }

inline liftlab::PseudometricSpace space(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::string> points;
  liftlab::RationalMatrix d(rows.size(), rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    points.push_back("p" + std::to_string(i));
    std::size_t k = 0;
    for (const char* v : row) d(i, k++) = q(v);
    ++i;
  }
  return liftlab::make_space(std::move(points), std::move(d));
}

inline liftlab::FuzzyRelation relation(std::initializer_list<std::initializer_list<const char*>> rows) {
  liftlab::FuzzyRelation r;
  const std::size_t cols = rows.begin()->size();
  r.r = liftlab::RationalMatrix(rows.size(), cols);
  std::size_t i = 0;
  for (const auto& row : rows) {
    r.sources.push_back("x" + std::to_string(i));
    std::size_t k = 0;
    for (const char* v : row) r.r(i, k++) = q(v);
    ++i;
  }
  for (std::size_t k = 0; k < cols; ++k) r.targets.push_back("y" + std::to_string(k));
  return r;
}

}  // namespace testing
