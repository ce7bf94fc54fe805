#pragma once

#include <cstddef>
#include <vector>

#include "cca/field.hpp"

namespace cca {

// Dense row-major matrix over a fixed field.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<Scalar> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);

// Exact rank: fraction-free integer elimination over the rationals (rows
// scaled integral first, pivoting on numerator magnitude), plain Gaussian
// elimination over a prime field.
std::size_t rank_exact(const Matrix& m);

}  // namespace cca
