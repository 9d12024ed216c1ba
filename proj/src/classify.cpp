#include "finslie/classify.hpp"

namespace finslie {

DouglasTest is_douglas(const LieAlgebra& g, const MetricTensor& metric, const ExactVector& q) {
  require_same_dim(q.dim(), g.dim(), "Douglas test");
  DouglasTest test;
  const Subspace derived = derived_algebra(g);
  for (const auto& b : derived.basis()) {
    Rational p = inner(metric, q, b);
    if (!p.is_zero()) test.evidence.push_back({b, std::move(p)});
  }
  test.douglas = test.evidence.empty();
  return test;
}

BerwaldTest is_berwald(const LieAlgebra& g, const MetricTensor& metric, const ExactVector& q) {
  require_same_dim(q.dim(), g.dim(), "Berwald test");
  const ConnectionTable conn = levi_civita(g, metric);
  BerwaldTest test;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    ExactVector d = conn.covariant(g.basis(i), q);
    if (!d.is_zero()) test.evidence.push_back({i, std::move(d)});
  }
  test.berwald = test.evidence.empty();
  return test;
}

Subspace douglas_subspace(const LieAlgebra& g, const MetricTensor& metric) {
  const Subspace derived = derived_algebra(g);
  if (derived.is_zero()) return Subspace::whole(g.dim());
  // rows (G b)^T; x is orthogonal iff every row annihilates it
  ExactMatrix constraints(derived.dim(), g.dim());
  for (std::size_t r = 0; r < derived.dim(); ++r) {
    const ExactVector gb = metric.gram() * derived.basis()[r];
    for (std::size_t c = 0; c < g.dim(); ++c) constraints(r, c) = gb[c];
  }
  return Subspace::span(g.dim(), nullspace(constraints));
}

Subspace berwald_subspace(const LieAlgebra& g, const MetricTensor& metric) {
  const Subspace douglas = douglas_subspace(g, metric);
  if (douglas.is_zero()) return douglas;
  const ConnectionTable conn = levi_civita(g, metric);
  const std::size_t n = g.dim();
  const std::size_t k = douglas.dim();

  // Q = sum_l t_l B_l; nabla_{e_i} Q = sum_l t_l nabla_{e_i} B_l = 0 for all i.
  ExactMatrix system(n * n, k);
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t i = 0; i < n; ++i) {
      const ExactVector d = conn.covariant(g.basis(i), douglas.basis()[l]);
      for (std::size_t c = 0; c < n; ++c) system(i * n + c, l) = d[c];
    }

  std::vector<ExactVector> solutions;
  for (const auto& t : nullspace(system)) {
    ExactVector q(n);
    for (std::size_t l = 0; l < k; ++l) q += t[l] * douglas.basis()[l];
    solutions.push_back(std::move(q));
  }
  return Subspace::span(n, solutions);
}

std::string to_string(RandersKind kind) {
  switch (kind) {
    case RandersKind::NotDouglas:
      return "NotDouglas";
    case RandersKind::BerwaldDouglas:
      return "BerwaldDouglas";
    case RandersKind::NonBerwaldDouglas:
      return "NonBerwaldDouglas";
  }
  return "?";
}

RandersClass classify_randers(const RandersStructure& r) {
  RandersClass out;
  out.douglas = is_douglas(r.algebra(), r.metric(), r.q_field());
  if (!out.douglas.douglas) {
    out.kind = RandersKind::NotDouglas;
    return out;
  }
  out.berwald = is_berwald(r.algebra(), r.metric(), r.q_field());
  out.kind = out.berwald->berwald ? RandersKind::BerwaldDouglas : RandersKind::NonBerwaldDouglas;
  return out;
}

CaseReport case_report(int case_id, const LieAlgebra& g, const MetricTensor& metric) {
  return {case_id, douglas_subspace(g, metric), berwald_subspace(g, metric)};
}

std::vector<CaseReport> reproduce_theorem() {
  std::vector<CaseReport> out;
  for (int c = 1; c <= 4; ++c) out.push_back(case_report(c, catalog(c), MetricTensor::identity(4)));
  return out;
}

std::vector<CaseReport> expected_theorem() {
  auto e = [](std::size_t i) { return ExactVector::basis(4, i); };
  auto span = [](std::vector<ExactVector> v) { return Subspace::span(4, v); };
  const ExactVector X = e(0), Z = e(2), W = e(3);
  return {
      {1, span({X}), span({X})},
      {2, span({Z, W}), span({W})},
      {3, span({X}), Subspace(4)},
      {4, span({X}), Subspace(4)},
  };
}

}  // namespace finslie
