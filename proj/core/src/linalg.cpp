#include "cca/linalg.hpp"

#include <utility>

#include "cca/errors.hpp"

namespace cca {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows),
      cols_(cols),
      field_(field),
      data_(rows * cols, Scalar::zero(field)) {}

bool Matrix::is_zero() const {
  for (const auto& value : data_) {
    if (!value.is_zero()) return false;
  }
  return true;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error("field mismatch");
  if (a.cols() != b.rows()) throw Error("matrix shape mismatch");
  Matrix out(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) = out.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

namespace {

// Bareiss fraction-free elimination on an integer matrix; every division is
// exact, so entries stay integral and growth stays polynomial.
std::size_t rank_bareiss(std::vector<std::vector<BigInt>> m) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  std::size_t rank = 0;
  BigInt prev_pivot = 1;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Partial pivoting on magnitude.
    std::size_t best = pivot_row;
    BigInt best_abs = abs(m[pivot_row][col]);
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      BigInt candidate = abs(m[r][col]);
      if (candidate > best_abs) {
        best = r;
        best_abs = candidate;
      }
    }
    if (best_abs == 0) continue;
    std::swap(m[pivot_row], m[best]);
    const BigInt pivot = m[pivot_row][col];
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (m[r][c] * pivot - m[r][col] * m[pivot_row][c]) / prev_pivot;
      }
      m[r][col] = 0;
    }
    prev_pivot = pivot;
    ++pivot_row;
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const Matrix& matrix) {
  std::vector<std::vector<BigInt>> m(matrix.rows(),
                                     std::vector<BigInt>(matrix.cols()));
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    BigInt lcm_den = 1;
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      lcm_den = lcm(lcm_den, denominator(matrix.at(r, c).rational_value()));
    }
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      const BigRational& value = matrix.at(r, c).rational_value();
      m[r][c] = numerator(value) * (lcm_den / denominator(value));
    }
  }
  return rank_bareiss(std::move(m));
}

std::size_t rank_prime(const Matrix& matrix) {
  Matrix m = matrix;
  std::size_t rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && m.at(found, col).is_zero()) ++found;
    if (found == m.rows()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::swap(m.at(pivot_row, c), m.at(found, c));
    }
    Scalar inv = m.at(pivot_row, col).inverse();
    for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
      if (m.at(r, col).is_zero()) continue;
      Scalar factor = m.at(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c) {
        m.at(r, c) = m.at(r, c) - factor * m.at(pivot_row, c);
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_exact(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return m.field().is_rationals() ? rank_rational(m) : rank_prime(m);
}

}  // namespace cca
