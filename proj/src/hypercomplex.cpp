#include "finslie/hypercomplex.hpp"

namespace finslie {

namespace {

void require_endomorphism(const LieAlgebra& g, const ExactMatrix& J) {
  if (!J.is_square()) throw DimensionMismatch("complex structure must be square");
  require_same_dim(J.rows(), g.dim(), "complex structure");
}

std::string structure_name(std::size_t k) { return "J" + std::to_string(k + 1); }

}  // namespace

ExactVector nijenhuis(const LieAlgebra& g, const ExactMatrix& J, const ExactVector& u, const ExactVector& v) {
  require_endomorphism(g, J);
  const ExactVector Ju = J * u;
  const ExactVector Jv = J * v;
  ExactVector n = bracket(g, u, v);
  n += J * bracket(g, Ju, v);
  n += J * bracket(g, u, Jv);
  n -= bracket(g, Ju, Jv);
  return n;
}

ComplexStructureReport verify_complex_structure(const LieAlgebra& g, const ExactMatrix& J) {
  require_endomorphism(g, J);
  ComplexStructureReport report;
  report.square_ok = (J * J) == -ExactMatrix::identity(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      ExactVector n = nijenhuis(g, J, g.basis(i), g.basis(j));
      if (!n.is_zero()) report.violations.push_back({i, j, std::move(n)});
    }
  report.integrable = report.violations.empty();
  return report;
}

HypercomplexReport verify_hypercomplex(const LieAlgebra& g, const ComplexStructureTriple& t) {
  HypercomplexReport report;
  for (std::size_t k = 0; k < 3; ++k) {
    report.structures[k] = verify_complex_structure(g, t.j[k]);
    if (!report.structures[k].square_ok) report.diagnostics.push_back(structure_name(k) + "^2 != -I");
    for (const auto& v : report.structures[k].violations) {
      report.diagnostics.push_back("N_" + std::to_string(k + 1) + "(" + g.label(v.i) + ", " + g.label(v.j) +
                                   ") = " + describe_vector(v.value, g.labels()));
    }
  }
  report.product_ok = (t.j[0] * t.j[1]) == t.j[2];
  report.anticommute_ok = (t.j[1] * t.j[0]) == -t.j[2];
  if (!report.product_ok) report.diagnostics.push_back("J1 J2 != J3");
  if (!report.anticommute_ok) report.diagnostics.push_back("J2 J1 != -J3");
  return report;
}

HyperHermitianReport verify_hyper_hermitian(const MetricTensor& metric, const ComplexStructureTriple& t) {
  HyperHermitianReport report;
  const std::size_t n = metric.dim();
  for (std::size_t k = 0; k < 3; ++k) {
    if (!t.j[k].is_square()) throw DimensionMismatch("complex structure must be square");
    require_same_dim(t.j[k].rows(), n, "complex structure");
    report.preserved[k] = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const ExactVector ei = ExactVector::basis(n, i), ej = ExactVector::basis(n, j);
        if (inner(metric, t.j[k] * ei, t.j[k] * ej) != inner(metric, ei, ej)) {
          report.preserved[k] = false;
          report.violations.push_back({k, i, j});
        }
      }
  }
  return report;
}

}  // namespace finslie
