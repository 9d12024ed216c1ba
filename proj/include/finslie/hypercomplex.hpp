#pragma once

#include <array>
#include <string>
#include <vector>

#include "finslie/algebra.hpp"
#include "finslie/riemann.hpp"

namespace finslie {

/// Three constant endomorphisms of the algebra (matrices acting on basis
/// coordinates), candidates for a left-invariant hypercomplex structure.
struct ComplexStructureTriple {
  std::array<ExactMatrix, 3> j;

  friend bool operator==(const ComplexStructureTriple&, const ComplexStructureTriple&) = default;
};

/// N(u,v) = [u,v] + J[Ju,v] + J[u,Jv] - [Ju,Jv]
ExactVector nijenhuis(const LieAlgebra& g, const ExactMatrix& J, const ExactVector& u, const ExactVector& v);

struct NijenhuisViolation {
  std::size_t i;
  std::size_t j;
  ExactVector value;  // N(e_i, e_j)
};

struct ComplexStructureReport {
  bool square_ok = false;
  bool integrable = false;
  std::vector<NijenhuisViolation> violations;

  bool ok() const { return square_ok && integrable; }
};

ComplexStructureReport verify_complex_structure(const LieAlgebra& g, const ExactMatrix& J);

struct HypercomplexReport {
  bool product_ok = false;        // J1 J2 == J3
  bool anticommute_ok = false;    // J2 J1 == -J3
  std::array<ComplexStructureReport, 3> structures;
  std::vector<std::string> diagnostics;

  bool ok() const {
    return product_ok && anticommute_ok && structures[0].ok() && structures[1].ok() && structures[2].ok();
  }
};

HypercomplexReport verify_hypercomplex(const LieAlgebra& g, const ComplexStructureTriple& t);

struct HermitianViolation {
  std::size_t structure;  // 0, 1, 2 for J1, J2, J3
  std::size_t i;
  std::size_t j;
};

struct HyperHermitianReport {
  std::array<bool, 3> preserved{};
  std::vector<HermitianViolation> violations;

  bool ok() const { return preserved[0] && preserved[1] && preserved[2]; }
};

/// Checks g(J_k e_i, J_k e_j) == g(e_i, e_j) for every basis pair and k.
HyperHermitianReport verify_hyper_hermitian(const MetricTensor& metric, const ComplexStructureTriple& t);

}  // namespace finslie
