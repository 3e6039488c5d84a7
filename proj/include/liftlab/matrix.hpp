#pragma once

#include "liftlab/rational.hpp"

#include <cstddef>
#include <vector>

namespace liftlab {

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols, const Rational& fill = Rational(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Rational>& data() const { return data_; }

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace liftlab
