#include "finslie/linalg.hpp"

#include <stdexcept>

namespace finslie {

RealVector to_real(const ExactVector& v) {
  RealVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i].to_double();
  return out;
}

RealMatrix to_real(const ExactMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

namespace {

// In-place Gauss-Jordan elimination; returns the pivot columns.
std::vector<std::size_t> eliminate(ExactMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
    }
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

ExactMatrix rref(const ExactMatrix& m) {
  ExactMatrix a = m;
  const auto pivots = eliminate(a);
  ExactMatrix out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

std::size_t rank(const ExactMatrix& m) {
  ExactMatrix a = m;
  return eliminate(a).size();
}

std::vector<ExactVector> nullspace(const ExactMatrix& m) {
  ExactMatrix a = m;
  const auto pivots = eliminate(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = eliminate(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Rational determinant(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  ExactMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a(sel, col).is_zero()) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

std::vector<Rational> leading_principal_minors(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("minors of non-square matrix");
  std::vector<Rational> minors;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    ExactMatrix block(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block(i, j) = m(i, j);
    minors.push_back(determinant(block));
  }
  return minors;
}

}  // namespace finslie
