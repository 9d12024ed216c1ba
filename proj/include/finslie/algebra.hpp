#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "finslie/linalg.hpp"

namespace finslie {

/// Finite-dimensional real Lie algebra given by exact structure constants
/// on a labelled basis: [e_i, e_j] = sum_k c(i, j, k) e_k.
///
/// Antisymmetry is enforced when brackets are set; the Jacobi identity is
/// not assumed and must be checked with jacobi_check().
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::vector<std::string> labels);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_bracket(std::size_t i, std::size_t j, const ExactVector& value);

  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim() + j) * dim() + k];
  }

  /// [e_i, e_j] as a vector.
  ExactVector basis_bracket(std::size_t i, std::size_t j) const;

  ExactVector basis(std::size_t i) const { return ExactVector::basis(dim(), i); }

  /// Matrix of ad_v, i.e. column j is [v, e_j].
  ExactMatrix ad(const ExactVector& v) const;

  bool is_abelian() const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  Rational& constant_ref(std::size_t i, std::size_t j, std::size_t k) {
    return constants_[(i * dim() + j) * dim() + k];
  }

  std::vector<std::string> labels_;
  std::vector<Rational> constants_;
};

/// Bilinear extension of the structure constants.
ExactVector bracket(const LieAlgebra& g, const ExactVector& u, const ExactVector& v);
RealVector bracket(const LieAlgebra& g, const RealVector& u, const RealVector& v);

struct JacobiViolation {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  /// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
  ExactVector residual;
};

/// Every basis triple i < j < k whose cyclic Jacobi sum is nonzero.
std::vector<JacobiViolation> jacobi_check(const LieAlgebra& g);

/// Linear subspace of the coordinate space, stored as the nonzero rows of a
/// reduced row echelon form so that equal subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<ExactVector>& vectors);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<ExactVector>& basis() const { return basis_; }

  bool contains(const ExactVector& v) const;
  bool contains(const Subspace& other) const;

  /// Basis vectors as rows.
  ExactMatrix as_rows() const;

  /// "span{X, Y}" style rendering using the given labels; "{0}" for the zero space.
  std::string describe(const std::vector<std::string>& labels) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<ExactVector> basis_;
};

/// Span of all brackets [e_i, e_j].
Subspace derived_algebra(const LieAlgebra& g);

/// Renders a vector as a linear combination of labels, e.g. "X - 1/2 Z".
std::string describe_vector(const ExactVector& v, const std::vector<std::string>& labels);

inline constexpr std::array<int, 5> kCatalogCases{0, 1, 2, 3, 4};

/// The abelian algebra (case 0) or one of the four non-abelian
/// four-dimensional algebras carrying a hypercomplex structure (cases 1-4),
/// on the orthonormal basis (X, Y, Z, W).
LieAlgebra catalog(int case_id);

}  // namespace finslie
