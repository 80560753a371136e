#include "hkcones/linalg.hpp"

namespace hkcones {

namespace {

void swap_index(Matrix<Rational>& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
  for (std::size_t r = 0; r < n; ++r) std::swap(m(r, i), m(r, j));
}

}  // namespace

Inertia inertia(const Matrix<Rational>& symmetric) {
  const std::size_t n = symmetric.rows();
  if (symmetric.cols() != n) fail(ErrorCode::DimensionMismatch, "inertia of a non-square matrix");
  Matrix<Rational> m = symmetric;
  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, pivot).is_zero()) ++pivot;
    if (pivot == n) {
      // zero diagonal: look for an off-diagonal entry and fold it onto the diagonal
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!m(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) {
        out.zero += static_cast<int>(n - k);
        break;
      }
      for (std::size_t c = 0; c < n; ++c) m(pi, c) += m(pj, c);
      for (std::size_t r = 0; r < n; ++r) m(r, pi) += m(r, pj);
      pivot = pi;
    }
    swap_index(m, pivot, k);
    const Rational p = m(k, k);
    (p.sign() > 0 ? out.positive : out.negative) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const Rational f = m(r, k) / p;
      for (std::size_t c = k + 1; c < n; ++c) m(r, c) -= f * m(k, c);
      m(r, k) = Rational();
    }
    for (std::size_t c = k + 1; c < n; ++c) m(k, c) = Rational();
  }
  return out;
}

bool is_negative_definite(const Matrix<Rational>& symmetric) {
  const Inertia in = inertia(symmetric);
  return in.negative == static_cast<int>(symmetric.rows());
}

}  // namespace hkcones
