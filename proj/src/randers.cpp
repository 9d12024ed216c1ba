#include "finslie/randers.hpp"

#include <cmath>

namespace finslie {

namespace {

// Relative step for the second differences of F^2.
constexpr double kRelativeStep = 1e-4;

double g_norm(const RandersStructure& r, const RealVector& v) { return std::sqrt(inner(r.metric(), v, v)); }

double f_squared(const RandersStructure& r, const RealVector& y) {
  const double f = eval_F(r, y);
  return f * f;
}

}  // namespace

RandersStructure make_randers(LieAlgebra algebra, MetricTensor metric, ExactVector q) {
  require_same_dim(algebra.dim(), metric.dim(), "Randers metric");
  require_same_dim(q.dim(), algebra.dim(), "Randers vector field");
  Rational norm = inner(metric, q, q);
  if (norm >= Rational(1)) {
    throw NormTooLarge("g(Q,Q) = " + norm.to_string() + " >= 1; F is not a Finsler metric");
  }
  return RandersStructure(std::move(algebra), std::move(metric), std::move(q), std::move(norm));
}

double eval_F(const RandersStructure& r, const RealVector& y) {
  require_same_dim(y.dim(), r.dim(), "F argument");
  const double alpha_sq = inner(r.metric(), y, y);
  return std::sqrt(alpha_sq) + inner(r.metric(), to_real(r.q_field()), y);
}

double eval_F(const RandersStructure& r, const ExactVector& y) { return eval_F(r, to_real(y)); }

double g_V(const RandersStructure& r, const RealVector& V, const RealVector& u, const RealVector& w) {
  require_same_dim(V.dim(), r.dim(), "g_V pole");
  require_same_dim(u.dim(), r.dim(), "g_V argument");
  require_same_dim(w.dim(), r.dim(), "g_V argument");
  const double v_norm = g_norm(r, V);
  if (v_norm == 0.0) throw ZeroDirection("g_V is undefined at V = 0");
  const double u_norm = g_norm(r, u);
  const double w_norm = g_norm(r, w);
  if (u_norm == 0.0 || w_norm == 0.0) return 0.0;

  const double su = kRelativeStep * v_norm / u_norm;
  const double sw = kRelativeStep * v_norm / w_norm;
  const RealVector a = su * u;
  const RealVector b = sw * w;
  const RealVector plus = a + b;
  const RealVector minus = a - b;
  const double mixed = (f_squared(r, V + plus) + f_squared(r, V - plus)) -
                       (f_squared(r, V + minus) + f_squared(r, V - minus));
  return 0.5 * mixed / (4.0 * su * sw);
}

Eigen::MatrixXd fundamental_tensor(const RandersStructure& r, const RealVector& y) {
  require_same_dim(y.dim(), r.dim(), "fundamental tensor");
  if (y.is_zero()) throw ZeroDirection("fundamental tensor is undefined at y = 0");
  const std::size_t n = r.dim();
  Eigen::MatrixXd h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = g_V(r, y, RealVector::basis(n, i), RealVector::basis(n, j));
      h(i, j) = v;
      h(j, i) = v;
    }
  return h;
}

double min_eigenvalue(const Eigen::MatrixXd& symmetric) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace finslie
