#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "finslie/algebra.hpp"
#include "finslie/randers.hpp"
#include "finslie/riemann.hpp"

namespace finslie {

class NotDouglas : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pole is zero or the two flag vectors are linearly dependent.
class DegenerateFlag : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Flag (P, V): pole V and a second vector completing P = span{U, V}.
struct Flag {
  ExactVector pole;
  ExactVector transverse;
};

struct FlagCurvatureResult {
  double k_f = 0.0;
  double k_g = 0.0;
  double correction = 0.0;  // the 1/(4F^4)(...) term
  double f_value = 0.0;     // F(V)
  double pole_norm_sq = 0.0;  // g(V, V)
  Rational exact_k_g;
};

/// U(V,S) defined by 2 g(U(V,S), R) = g([R,V],S) + g([R,S],V) for all R.
ExactVector u_map(const LieAlgebra& g, const MetricTensor& metric, const ExactVector& v, const ExactVector& s);

/// Flag curvature evaluator for one Douglas-type Randers metric. The
/// Riemannian connection and curvature are computed once on construction.
/// All bracket, ad* and U-map intermediates are exact; doubles enter only
/// through F.
class DouglasFlagCurvature {
 public:
  /// Throws NotDouglas when Q is not orthogonal to the derived algebra.
  explicit DouglasFlagCurvature(RandersStructure randers);

  const RandersStructure& randers() const { return randers_; }
  const RiemannianGeometry& geometry() const { return geometry_; }

  /// K^F = g(V,V)/F^2 K^g + (3 g(U(V,V),Q)^2 - 4 F g(U(V,U(V,V)),Q)) / (4 F^4)
  FlagCurvatureResult deng_hou(const Flag& flag) const;

  /// K^F = g(V,V)/F^2 K^g
  ///       + (3 g([Q,V],V)^2 - 2F (g([[Q,V],V],V) - g(V,[Q, ad*_V V]))) / (4 F^4)
  FlagCurvatureResult simplified(const Flag& flag) const;

 private:
  FlagCurvatureResult assemble(const Flag& flag, const Rational& quadratic, const Rational& cubic) const;

  RandersStructure randers_;
  RiemannianGeometry geometry_;
};

FlagCurvatureResult flag_curvature_deng_hou(const RandersStructure& r, const Flag& flag);
FlagCurvatureResult flag_curvature_simplified(const RandersStructure& r, const Flag& flag);

/// Parameters of the closed-form case formulas: Q = pZ + qW (case 2) or
/// Q = qX (cases 3, 4), pole V = aX + bY + cZ + dW.
struct CaseParameters {
  double p = 0.0;
  double q = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

/// Correction term of the closed-form flag curvature for catalog case 2, 3 or 4.
double flag_curvature_case_correction(int case_id, const CaseParameters& params);

/// Closed-form flag curvature for catalog case 2, 3 or 4 given K^g of the plane.
double flag_curvature_case(int case_id, const CaseParameters& params, double k_g);

struct SignSample {
  Flag flag;
  FlagCurvatureResult result;
};

struct SignReport {
  int case_id = 0;
  std::size_t samples = 0;
  double max_abs_correction = 0.0;
  std::vector<SignSample> counterexamples;  // nonzero correction or sign mismatch

  bool ok() const { return counterexamples.empty(); }
};

/// Poles for which the correction term vanishes on the non-Berwald Douglas
/// cases: span{Z, W} for case 2 and span{Q} for cases 3 and 4.
Subspace sign_directions(int case_id, const RandersStructure& r);

/// Samples flags with pole in sign_directions() and checks that the
/// correction vanishes (|c| <= tolerance) and sign(K^F) == sign(K^g).
SignReport sign_analysis(const RandersStructure& r, int case_id, std::size_t samples, std::uint64_t seed,
                         double tolerance = 1e-12);

int sign_of(double x);

}  // namespace finslie
