#pragma once

#include <stdexcept>
#include <vector>

#include "finslie/algebra.hpp"

namespace finslie {

class InvalidMetric : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two vectors meant to span a plane are linearly dependent.
class DegeneratePlane : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Left-invariant inner product, given by its exact Gram matrix on the
/// algebra basis. Symmetry and positive definiteness (leading principal
/// minors) are checked on construction.
class MetricTensor {
 public:
  explicit MetricTensor(ExactMatrix gram);
  static MetricTensor identity(std::size_t dim) { return MetricTensor(ExactMatrix::identity(dim)); }

  std::size_t dim() const { return gram_.rows(); }
  const ExactMatrix& gram() const { return gram_; }
  const ExactMatrix& inverse_gram() const { return inverse_; }
  const RealMatrix& real_gram() const { return real_gram_; }

  friend bool operator==(const MetricTensor& a, const MetricTensor& b) { return a.gram_ == b.gram_; }

 private:
  ExactMatrix gram_;
  ExactMatrix inverse_;
  RealMatrix real_gram_;
};

Rational inner(const MetricTensor& metric, const ExactVector& u, const ExactVector& v);
double inner(const MetricTensor& metric, const RealVector& u, const RealVector& v);

/// Metric transpose of ad_v: the matrix A with g(A w, s) = g(w, [v, s]).
ExactMatrix ad_star(const LieAlgebra& g, const MetricTensor& metric, const ExactVector& v);

/// Levi-Civita connection on left-invariant fields; entry (i, j) is
/// nabla_{e_i} e_j.
class ConnectionTable {
 public:
  ConnectionTable(std::size_t dim, std::vector<ExactVector> entries)
      : dim_(dim), entries_(std::move(entries)) {}

  std::size_t dim() const { return dim_; }
  const ExactVector& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  /// nabla_u v for constant-coefficient fields.
  ExactVector covariant(const ExactVector& u, const ExactVector& v) const;

 private:
  std::size_t dim_;
  std::vector<ExactVector> entries_;
};

/// nabla_u v = 1/2 ([u,v] - ad*_u v - ad*_v u).
ConnectionTable levi_civita(const LieAlgebra& g, const MetricTensor& metric);

/// Entry (i, j, k) is R(e_i, e_j) e_k with
/// R(u,v)w = nabla_u nabla_v w - nabla_v nabla_u w - nabla_[u,v] w.
class CurvatureTable {
 public:
  CurvatureTable(std::size_t dim, std::vector<ExactVector> entries)
      : dim_(dim), entries_(std::move(entries)) {}

  std::size_t dim() const { return dim_; }
  const ExactVector& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * dim_ + j) * dim_ + k];
  }

  /// Trilinear extension R(u, v) w.
  ExactVector apply(const ExactVector& u, const ExactVector& v, const ExactVector& w) const;

 private:
  std::size_t dim_;
  std::vector<ExactVector> entries_;
};

CurvatureTable curvature_tensor(const LieAlgebra& g, const ConnectionTable& conn);

/// Connection and curvature of one (algebra, metric) pair, computed once.
class RiemannianGeometry {
 public:
  RiemannianGeometry(LieAlgebra algebra, MetricTensor metric);

  const LieAlgebra& algebra() const { return algebra_; }
  const MetricTensor& metric() const { return metric_; }
  const ConnectionTable& connection() const { return connection_; }
  const CurvatureTable& curvature() const { return curvature_; }

  /// g(R(u,v)v, u) / (g(u,u) g(v,v) - g(u,v)^2); throws DegeneratePlane.
  Rational sectional_curvature(const ExactVector& u, const ExactVector& v) const;

 private:
  LieAlgebra algebra_;
  MetricTensor metric_;
  ConnectionTable connection_;
  CurvatureTable curvature_;
};

Rational sectional_curvature(const LieAlgebra& g, const MetricTensor& metric, const ExactVector& u,
                             const ExactVector& v);

}  // namespace finslie
