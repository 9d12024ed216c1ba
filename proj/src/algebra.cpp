#include "finslie/algebra.hpp"

#include <sstream>
#include <stdexcept>
#include <type_traits>

namespace finslie {

LieAlgebra::LieAlgebra(std::vector<std::string> labels)
    : labels_(std::move(labels)), constants_(labels_.size() * labels_.size() * labels_.size()) {
  if (labels_.empty()) throw std::invalid_argument("Lie algebra must have positive dimension");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const ExactVector& value) {
  require_same_dim(value.dim(), dim(), "bracket value");
  if (i >= dim() || j >= dim()) throw std::out_of_range("bracket index");
  if (i == j) {
    if (!value.is_zero()) throw std::invalid_argument("[e_i, e_i] must vanish");
    return;
  }
  for (std::size_t k = 0; k < dim(); ++k) {
    constant_ref(i, j, k) = value[k];
    constant_ref(j, i, k) = -value[k];
  }
}

ExactVector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  ExactVector out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = constant(i, j, k);
  return out;
}

ExactMatrix LieAlgebra::ad(const ExactVector& v) const {
  ExactMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const ExactVector col = bracket(*this, v, basis(j));
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
  }
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& c : constants_)
    if (!c.is_zero()) return false;
  return true;
}

namespace {

template <typename T>
Vector<T> bracket_impl(const LieAlgebra& g, const Vector<T>& u, const Vector<T>& v) {
  require_same_dim(u.dim(), g.dim(), "bracket lhs");
  require_same_dim(v.dim(), g.dim(), "bracket rhs");
  const std::size_t n = g.dim();
  Vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == T(0)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || v[j] == T(0)) continue;
      const T w = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = g.constant(i, j, k);
        if (c.is_zero()) continue;
        if constexpr (std::is_same_v<T, Rational>) {
          out[k] += w * c;
        } else {
          out[k] += w * c.to_double();
        }
      }
    }
  }
  return out;
}

}  // namespace

ExactVector bracket(const LieAlgebra& g, const ExactVector& u, const ExactVector& v) {
  return bracket_impl(g, u, v);
}

RealVector bracket(const LieAlgebra& g, const RealVector& u, const RealVector& v) {
  return bracket_impl(g, u, v);
}

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& g) {
  std::vector<JacobiViolation> out;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const ExactVector ei = g.basis(i), ej = g.basis(j), ek = g.basis(k);
        ExactVector sum = bracket(g, g.basis_bracket(i, j), ek);
        sum += bracket(g, g.basis_bracket(j, k), ei);
        sum += bracket(g, g.basis_bracket(k, i), ej);
        if (!sum.is_zero()) out.push_back({i, j, k, std::move(sum)});
      }
  return out;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<ExactVector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  ExactMatrix m(vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    require_same_dim(vectors[r].dim(), ambient_dim, "subspace generator");
    for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = vectors[r][c];
  }
  const ExactMatrix reduced = rref(m);
  for (std::size_t r = 0; r < reduced.rows(); ++r) s.basis_.push_back(reduced.row(r));
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<ExactVector> gens;
  for (std::size_t i = 0; i < ambient_dim; ++i) gens.push_back(ExactVector::basis(ambient_dim, i));
  return span(ambient_dim, gens);
}

bool Subspace::contains(const ExactVector& v) const {
  require_same_dim(v.dim(), ambient_dim_, "subspace membership");
  std::vector<ExactVector> gens = basis_;
  gens.push_back(v);
  return span(ambient_dim_, gens).dim() == dim();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

ExactMatrix Subspace::as_rows() const {
  ExactMatrix m(basis_.size(), ambient_dim_);
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (std::size_t c = 0; c < ambient_dim_; ++c) m(r, c) = basis_[r][c];
  return m;
}

std::string describe_vector(const ExactVector& v, const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].is_zero()) continue;
    Rational c = v[i];
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    c = abs(c);
    if (c != Rational(1)) os << c << " ";
    os << labels.at(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string Subspace::describe(const std::vector<std::string>& labels) const {
  if (is_zero()) return "{0}";
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) os << ", ";
    os << describe_vector(basis_[i], labels);
  }
  os << "}";
  return os.str();
}

Subspace derived_algebra(const LieAlgebra& g) {
  std::vector<ExactVector> images;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) images.push_back(g.basis_bracket(i, j));
  return Subspace::span(g.dim(), images);
}

LieAlgebra catalog(int case_id) {
  enum : std::size_t { X = 0, Y = 1, Z = 2, W = 3 };
  LieAlgebra g({"X", "Y", "Z", "W"});
  auto e = [](std::size_t i) { return ExactVector::basis(4, i); };
  const Rational half(1, 2);
  switch (case_id) {
    case 0:
      break;
    case 1:
      g.set_bracket(Y, Z, e(W));
      g.set_bracket(Z, W, e(Y));
      g.set_bracket(W, Y, e(Z));
      break;
    case 2:
      g.set_bracket(X, Z, e(X));
      g.set_bracket(Y, Z, e(Y));
      g.set_bracket(X, W, e(Y));
      g.set_bracket(Y, W, -e(X));
      break;
    case 3:
      g.set_bracket(X, Y, e(Y));
      g.set_bracket(X, Z, e(Z));
      g.set_bracket(X, W, e(W));
      break;
    case 4:
      g.set_bracket(X, Y, e(Y));
      g.set_bracket(X, Z, half * e(Z));
      g.set_bracket(X, W, half * e(W));
      g.set_bracket(Z, W, half * e(Y));
      break;
    default:
      throw std::invalid_argument("unknown catalog case " + std::to_string(case_id) +
                                  " (expected 0..4)");
  }
  return g;
}

}  // namespace finslie
