#pragma once

#include <Eigen/Dense>

#include <stdexcept>

#include "finslie/algebra.hpp"
#include "finslie/riemann.hpp"

namespace finslie {

/// g(Q, Q) >= 1: F = sqrt(g(y,y)) + g(Q,y) is not a Finsler metric.
class NormTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A Finsler quantity was requested at the zero vector.
class ZeroDirection : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Left-invariant Randers metric F(y) = sqrt(g(y,y)) + g(Q,y).
///
/// The one-form b is never stored; b(y) is always g(Q, y). Instances can
/// only be obtained from make_randers(), so g(Q,Q) < 1 holds for every
/// live object.
class RandersStructure {
 public:
  const LieAlgebra& algebra() const { return algebra_; }
  const MetricTensor& metric() const { return metric_; }
  const ExactVector& q_field() const { return q_; }
  const Rational& norm_q_squared() const { return norm_q_squared_; }
  std::size_t dim() const { return algebra_.dim(); }

 private:
  friend RandersStructure make_randers(LieAlgebra algebra, MetricTensor metric, ExactVector q);
  RandersStructure(LieAlgebra algebra, MetricTensor metric, ExactVector q, Rational norm)
      : algebra_(std::move(algebra)), metric_(std::move(metric)), q_(std::move(q)), norm_q_squared_(std::move(norm)) {}

  LieAlgebra algebra_;
  MetricTensor metric_;
  ExactVector q_;
  Rational norm_q_squared_;
};

/// Throws NormTooLarge unless g(Q,Q) < 1 (exact comparison).
RandersStructure make_randers(LieAlgebra algebra, MetricTensor metric, ExactVector q);

double eval_F(const RandersStructure& r, const RealVector& y);
double eval_F(const RandersStructure& r, const ExactVector& y);

/// g_V(u, w) = 1/2 d^2/ds dt F^2(V + s u + t w) at s = t = 0, by a central
/// mixed difference. Exactly symmetric in (u, w).
double g_V(const RandersStructure& r, const RealVector& V, const RealVector& u, const RealVector& w);

/// Hessian 1/2 d^2 F^2 / dy_i dy_j at y, by central differences.
Eigen::MatrixXd fundamental_tensor(const RandersStructure& r, const RealVector& y);

double min_eigenvalue(const Eigen::MatrixXd& symmetric);

}  // namespace finslie
