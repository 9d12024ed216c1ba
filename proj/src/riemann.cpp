#include "finslie/riemann.hpp"

namespace finslie {

MetricTensor::MetricTensor(ExactMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square() || gram_.rows() == 0) throw InvalidMetric("metric must be a non-empty square matrix");
  if (!gram_.is_symmetric()) throw InvalidMetric("metric Gram matrix is not symmetric");
  const auto minors = leading_principal_minors(gram_);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    if (minors[k].sign() <= 0) {
      throw InvalidMetric("metric is not positive definite (leading minor " + std::to_string(k + 1) +
                          " = " + minors[k].to_string() + ")");
    }
  }
  inverse_ = inverse(gram_);
  real_gram_ = to_real(gram_);
}

Rational inner(const MetricTensor& metric, const ExactVector& u, const ExactVector& v) {
  require_same_dim(u.dim(), metric.dim(), "inner product lhs");
  require_same_dim(v.dim(), metric.dim(), "inner product rhs");
  return dot(u, metric.gram() * v);
}

double inner(const MetricTensor& metric, const RealVector& u, const RealVector& v) {
  require_same_dim(u.dim(), metric.dim(), "inner product lhs");
  require_same_dim(v.dim(), metric.dim(), "inner product rhs");
  return dot(u, metric.real_gram() * v);
}

ExactMatrix ad_star(const LieAlgebra& g, const MetricTensor& metric, const ExactVector& v) {
  require_same_dim(g.dim(), metric.dim(), "ad* metric");
  // A^T G = G ad_v  =>  A = G^{-1} ad_v^T G
  return metric.inverse_gram() * (g.ad(v).transpose() * metric.gram());
}

ExactVector ConnectionTable::covariant(const ExactVector& u, const ExactVector& v) const {
  require_same_dim(u.dim(), dim_, "covariant derivative direction");
  require_same_dim(v.dim(), dim_, "covariant derivative field");
  ExactVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      out += (u[i] * v[j]) * (*this)(i, j);
    }
  }
  return out;
}

ConnectionTable levi_civita(const LieAlgebra& g, const MetricTensor& metric) {
  const std::size_t n = g.dim();
  std::vector<ExactMatrix> stars;
  stars.reserve(n);
  for (std::size_t i = 0; i < n; ++i) stars.push_back(ad_star(g, metric, g.basis(i)));

  const Rational half(1, 2);
  std::vector<ExactVector> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ExactVector v = g.basis_bracket(i, j);
      v -= stars[i].column(j);
      v -= stars[j].column(i);
      entries.push_back(half * v);
    }
  return ConnectionTable(n, std::move(entries));
}

ExactVector CurvatureTable::apply(const ExactVector& u, const ExactVector& v, const ExactVector& w) const {
  require_same_dim(u.dim(), dim_, "curvature argument");
  require_same_dim(v.dim(), dim_, "curvature argument");
  require_same_dim(w.dim(), dim_, "curvature argument");
  ExactVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || v[j].is_zero()) continue;
      const Rational uv = u[i] * v[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (w[k].is_zero()) continue;
        out += (uv * w[k]) * (*this)(i, j, k);
      }
    }
  }
  return out;
}

CurvatureTable curvature_tensor(const LieAlgebra& g, const ConnectionTable& conn) {
  const std::size_t n = g.dim();
  std::vector<ExactVector> entries;
  entries.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const ExactVector ei = g.basis(i), ej = g.basis(j);
        ExactVector r = conn.covariant(ei, conn(j, k));
        r -= conn.covariant(ej, conn(i, k));
        r -= conn.covariant(g.basis_bracket(i, j), g.basis(k));
        entries.push_back(std::move(r));
      }
  return CurvatureTable(n, std::move(entries));
}

RiemannianGeometry::RiemannianGeometry(LieAlgebra algebra, MetricTensor metric)
    : algebra_(std::move(algebra)),
      metric_(std::move(metric)),
      connection_(levi_civita(algebra_, metric_)),
      curvature_(curvature_tensor(algebra_, connection_)) {
  require_same_dim(algebra_.dim(), metric_.dim(), "geometry");
}

Rational RiemannianGeometry::sectional_curvature(const ExactVector& u, const ExactVector& v) const {
  const Rational area = inner(metric_, u, u) * inner(metric_, v, v) - inner(metric_, u, v) * inner(metric_, u, v);
  if (area.is_zero()) throw DegeneratePlane("sectional curvature: vectors do not span a plane");
  return inner(metric_, curvature_.apply(u, v, v), u) / area;
}

Rational sectional_curvature(const LieAlgebra& g, const MetricTensor& metric, const ExactVector& u,
                             const ExactVector& v) {
  return RiemannianGeometry(g, metric).sectional_curvature(u, v);
}

}  // namespace finslie
