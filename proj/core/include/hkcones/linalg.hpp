#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hkcones/error.hpp"
#include "hkcones/scalar.hpp"

namespace hkcones {

/// Dense row-major matrix over an exact field type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Solves M x = rhs exactly by Gaussian elimination. Returns nullopt when M is
/// singular. Works over any field type with +,-,*,/ and is_zero().
template <class T>
std::optional<std::vector<T>> solve_linear(Matrix<T> m, std::vector<T> rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) fail(ErrorCode::DimensionMismatch, "solve_linear shape");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      std::swap(rhs[pivot], rhs[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const T factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<T> x(n);
  for (std::size_t i = n; i-- > 0;) {
    T acc = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= m(i, c) * x[c];
    x[i] = acc / m(i, i);
  }
  return x;
}

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Sylvester inertia of a symmetric rational matrix via congruence
/// diagonalization (symmetric pivoting, with an i+j row/column combination
/// when the remaining diagonal vanishes).
Inertia inertia(const Matrix<Rational>& symmetric);

bool is_negative_definite(const Matrix<Rational>& symmetric);

}  // namespace hkcones
