#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "finslie/rational.hpp"

namespace finslie {

/// Raised when operands live in spaces of different dimension.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

/// Coefficient tuple in a fixed basis of a Lie algebra.
template <typename T>
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coeffs_(dim, T(0)) {}
  Vector(std::initializer_list<T> init) : coeffs_(init) {}
  explicit Vector(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {}

  static Vector basis(std::size_t dim, std::size_t index) {
    Vector v(dim);
    v[index] = T(1);
    return v;
  }

  std::size_t dim() const { return coeffs_.size(); }
  T& operator[](std::size_t i) { return coeffs_[i]; }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const T> coeffs() const { return coeffs_; }
  auto begin() const { return coeffs_.begin(); }
  auto end() const { return coeffs_.end(); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!(c == T(0))) return false;
    }
    return true;
  }

  Vector& operator+=(const Vector& rhs) {
    require_same_dim(dim(), rhs.dim(), "vector addition");
    for (std::size_t i = 0; i < dim(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  Vector& operator-=(const Vector& rhs) {
    require_same_dim(dim(), rhs.dim(), "vector subtraction");
    for (std::size_t i = 0; i < dim(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }
  Vector& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const T& s, Vector v) { return v *= s; }
  friend Vector operator*(Vector v, const T& s) { return v *= s; }
  Vector operator-() const {
    Vector out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend bool operator==(const Vector& a, const Vector& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<T> coeffs_;
};

using ExactVector = Vector<Rational>;
using RealVector = Vector<double>;

RealVector to_real(const ExactVector& v);

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw DimensionMismatch("matrix data size");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Matrix whose j-th column is columns[j].
  static Matrix from_columns(std::span<const Vector<T>> columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      require_same_dim(columns[j].dim(), rows, "matrix column");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector<T> row(std::size_t i) const {
    Vector<T> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  Vector<T> column(std::size_t j) const {
    Vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  friend Vector<T> operator*(const Matrix& m, const Vector<T>& v) {
    require_same_dim(m.cols_, v.dim(), "matrix-vector product");
    Vector<T> out(m.rows_);
    for (std::size_t i = 0; i < m.rows_; ++i) {
      T acc(0);
      for (std::size_t j = 0; j < m.cols_; ++j) acc += m(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_dim(a.cols_, b.rows_, "matrix product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    require_same_dim(a.data_.size(), b.data_.size(), "matrix addition");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  Matrix operator-() const { return T(-1) * *this; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;

RealMatrix to_real(const ExactMatrix& m);

/// Plain Euclidean coordinate dot product (no metric).
template <typename T>
T dot(const Vector<T>& a, const Vector<T>& b) {
  require_same_dim(a.dim(), b.dim(), "dot product");
  T acc(0);
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

/// Reduced row echelon form. Zero rows are dropped; remaining rows are sorted
/// by pivot column with unit pivots.
ExactMatrix rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Basis of {x : m x = 0}, in reduced echelon form.
std::vector<ExactVector> nullspace(const ExactMatrix& m);

/// Exact inverse; throws std::domain_error when singular.
ExactMatrix inverse(const ExactMatrix& m);

Rational determinant(const ExactMatrix& m);

/// Determinants of the leading k×k blocks, k = 1..n.
std::vector<Rational> leading_principal_minors(const ExactMatrix& m);

}  // namespace finslie
