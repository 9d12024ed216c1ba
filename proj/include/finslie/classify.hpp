#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finslie/algebra.hpp"
#include "finslie/randers.hpp"
#include "finslie/riemann.hpp"

namespace finslie {

struct OrthogonalityDefect {
  ExactVector derived_vector;  // basis vector of [g, g]
  Rational pairing;            // g(Q, derived_vector), nonzero
};

struct DouglasTest {
  bool douglas = false;
  std::vector<OrthogonalityDefect> evidence;
};

struct ParallelDefect {
  std::size_t direction;  // i in nabla_{e_i} Q
  ExactVector derivative;
};

struct BerwaldTest {
  bool berwald = false;
  std::vector<ParallelDefect> evidence;
};

/// Douglas type iff Q is g-orthogonal to the derived algebra.
DouglasTest is_douglas(const LieAlgebra& g, const MetricTensor& metric, const ExactVector& q);

/// Berwald type iff Q is parallel for the Levi-Civita connection of g.
BerwaldTest is_berwald(const LieAlgebra& g, const MetricTensor& metric, const ExactVector& q);

/// Orthogonal complement of [g, g] with respect to the metric.
Subspace douglas_subspace(const LieAlgebra& g, const MetricTensor& metric);

/// Vectors of the Douglas subspace with nabla Q = 0.
Subspace berwald_subspace(const LieAlgebra& g, const MetricTensor& metric);

enum class RandersKind { NotDouglas, BerwaldDouglas, NonBerwaldDouglas };

std::string to_string(RandersKind kind);

struct RandersClass {
  RandersKind kind = RandersKind::NotDouglas;
  DouglasTest douglas;
  std::optional<BerwaldTest> berwald;  // only evaluated for Douglas metrics
};

RandersClass classify_randers(const RandersStructure& r);

struct CaseReport {
  int case_id = 0;
  Subspace douglas{4};
  Subspace berwald{4};

  friend bool operator==(const CaseReport&, const CaseReport&) = default;
};

CaseReport case_report(int case_id, const LieAlgebra& g, const MetricTensor& metric);

/// Case reports for catalog cases 1-4 with the orthonormal metric.
std::vector<CaseReport> reproduce_theorem();

/// The classification as stated for the four catalog cases: Douglas and
/// Berwald directions per case.
std::vector<CaseReport> expected_theorem();

}  // namespace finslie
