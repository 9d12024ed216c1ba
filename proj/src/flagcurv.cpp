#include "finslie/flagcurv.hpp"

#include <cmath>

#include "finslie/classify.hpp"
#include "finslie/sampling.hpp"

namespace finslie {

ExactVector u_map(const LieAlgebra& g, const MetricTensor& metric, const ExactVector& v, const ExactVector& s) {
  require_same_dim(v.dim(), g.dim(), "U-map argument");
  require_same_dim(s.dim(), g.dim(), "U-map argument");
  const Rational half(1, 2);
  ExactVector rhs(g.dim());
  for (std::size_t r = 0; r < g.dim(); ++r) {
    const ExactVector er = g.basis(r);
    rhs[r] = half * (inner(metric, bracket(g, er, v), s) + inner(metric, bracket(g, er, s), v));
  }
  return metric.inverse_gram() * rhs;
}

namespace {

RandersStructure require_douglas(RandersStructure r) {
  const DouglasTest test = is_douglas(r.algebra(), r.metric(), r.q_field());
  if (!test.douglas) {
    throw NotDouglas("Q is not orthogonal to the derived algebra (g(Q, " +
                     describe_vector(test.evidence.front().derived_vector, r.algebra().labels()) +
                     ") = " + test.evidence.front().pairing.to_string() + ")");
  }
  return r;
}

}  // namespace

DouglasFlagCurvature::DouglasFlagCurvature(RandersStructure randers)
    : randers_(require_douglas(std::move(randers))), geometry_(randers_.algebra(), randers_.metric()) {}

FlagCurvatureResult DouglasFlagCurvature::assemble(const Flag& flag, const Rational& quadratic,
                                                   const Rational& cubic) const {
  const MetricTensor& m = randers_.metric();
  const ExactVector& V = flag.pole;
  const ExactVector& U = flag.transverse;
  require_same_dim(V.dim(), randers_.dim(), "flag pole");
  require_same_dim(U.dim(), randers_.dim(), "flag vector");
  const Rational vv = inner(m, V, V);
  const Rational area = inner(m, U, U) * vv - inner(m, U, V) * inner(m, U, V);
  if (vv.is_zero() || area.is_zero()) throw DegenerateFlag("flag vectors do not span a plane");

  FlagCurvatureResult out;
  out.exact_k_g = geometry_.sectional_curvature(U, V);
  out.k_g = out.exact_k_g.to_double();
  out.pole_norm_sq = vv.to_double();
  out.f_value = std::sqrt(out.pole_norm_sq) + inner(m, randers_.q_field(), V).to_double();
  const double f = out.f_value;
  const double f2 = f * f;
  const double q2 = quadratic.to_double();
  out.correction = (3.0 * q2 * q2 - f * cubic.to_double()) / (4.0 * f2 * f2);
  out.k_f = out.pole_norm_sq / f2 * out.k_g + out.correction;
  return out;
}

FlagCurvatureResult DouglasFlagCurvature::deng_hou(const Flag& flag) const {
  const LieAlgebra& g = randers_.algebra();
  const MetricTensor& m = randers_.metric();
  const ExactVector& V = flag.pole;
  const ExactVector& Q = randers_.q_field();
  require_same_dim(V.dim(), g.dim(), "flag pole");
  const ExactVector uvv = u_map(g, m, V, V);
  const Rational quadratic = inner(m, uvv, Q);
  const Rational cubic = Rational(4) * inner(m, u_map(g, m, V, uvv), Q);
  return assemble(flag, quadratic, cubic);
}

FlagCurvatureResult DouglasFlagCurvature::simplified(const Flag& flag) const {
  const LieAlgebra& g = randers_.algebra();
  const MetricTensor& m = randers_.metric();
  const ExactVector& V = flag.pole;
  const ExactVector& Q = randers_.q_field();
  require_same_dim(V.dim(), g.dim(), "flag pole");
  const ExactVector qv = bracket(g, Q, V);
  const Rational quadratic = inner(m, qv, V);
  const Rational first = inner(m, bracket(g, qv, V), V);
  const Rational second = inner(m, V, bracket(g, Q, ad_star(g, m, V) * V));
  const Rational cubic = Rational(2) * (first - second);
  return assemble(flag, quadratic, cubic);
}

FlagCurvatureResult flag_curvature_deng_hou(const RandersStructure& r, const Flag& flag) {
  return DouglasFlagCurvature(r).deng_hou(flag);
}

FlagCurvatureResult flag_curvature_simplified(const RandersStructure& r, const Flag& flag) {
  return DouglasFlagCurvature(r).simplified(flag);
}

namespace {

double case_f_value(int case_id, const CaseParameters& s) {
  const double alpha = std::sqrt(s.a * s.a + s.b * s.b + s.c * s.c + s.d * s.d);
  return case_id == 2 ? alpha + s.p * s.c + s.q * s.d : alpha + s.q * s.a;
}

void require_case_parameters(int case_id, const CaseParameters& s) {
  if (case_id == 2) {
    if (!(s.p * s.p + s.q * s.q < 1.0)) throw std::invalid_argument("case 2 requires p^2 + q^2 < 1");
  } else if (case_id == 3 || case_id == 4) {
    if (!(std::abs(s.q) < 1.0)) throw std::invalid_argument("cases 3 and 4 require |q| < 1");
  } else {
    throw std::invalid_argument("closed-form flag curvature exists only for cases 2, 3, 4");
  }
  if (s.a == 0.0 && s.b == 0.0 && s.c == 0.0 && s.d == 0.0) throw std::invalid_argument("pole must be nonzero");
}

}  // namespace

double flag_curvature_case_correction(int case_id, const CaseParameters& s) {
  require_case_parameters(case_id, s);
  const double F = case_f_value(case_id, s);
  const double F4 = F * F * F * F;
  const double a2 = s.a * s.a, b2 = s.b * s.b, c2 = s.c * s.c, d2 = s.d * s.d;
  switch (case_id) {
    case 2: {
      const double t = a2 + b2;
      return (3.0 * s.p * s.p * t * t + 4.0 * s.c * s.p * F * t) / (4.0 * F4);
    }
    case 3: {
      const double t = b2 + c2 + d2;
      return (3.0 * s.q * s.q * t * t + 4.0 * s.a * s.q * F * t) / (4.0 * F4);
    }
    default: {
      const double t = 2.0 * b2 + c2 + d2;
      return (0.75 * s.q * s.q * t * t + s.a * s.q * F * (4.0 * b2 + c2 + d2)) / (4.0 * F4);
    }
  }
}

double flag_curvature_case(int case_id, const CaseParameters& s, double k_g) {
  const double correction = flag_curvature_case_correction(case_id, s);
  const double F = case_f_value(case_id, s);
  const double vv = s.a * s.a + s.b * s.b + s.c * s.c + s.d * s.d;
  return vv / (F * F) * k_g + correction;
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

Subspace sign_directions(int case_id, const RandersStructure& r) {
  const std::size_t n = r.dim();
  switch (case_id) {
    case 2:
      return Subspace::span(n, {ExactVector::basis(n, 2), ExactVector::basis(n, 3)});
    case 3:
    case 4:
      return Subspace::span(n, {r.q_field()});
    default:
      throw std::invalid_argument("sign analysis covers catalog cases 2, 3, 4");
  }
}

SignReport sign_analysis(const RandersStructure& r, int case_id, std::size_t samples, std::uint64_t seed,
                         double tolerance) {
  const Subspace poles = sign_directions(case_id, r);
  if (poles.is_zero()) throw std::invalid_argument("sign analysis needs Q != 0");
  const DouglasFlagCurvature evaluator(r);
  SignReport report;
  report.case_id = case_id;
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = sample_engine(seed, i);
    Flag flag{random_vector_in(rng, poles), random_vector(rng, r.dim())};
    while (Subspace::span(r.dim(), {flag.pole, flag.transverse}).dim() < 2) {
      flag.transverse = random_vector(rng, r.dim());
    }
    FlagCurvatureResult res = evaluator.simplified(flag);
    ++report.samples;
    report.max_abs_correction = std::max(report.max_abs_correction, std::abs(res.correction));
    const bool vanishes = std::abs(res.correction) <= tolerance;
    const bool same_sign = sign_of(res.k_f) == res.exact_k_g.sign();
    if (!vanishes || !same_sign) report.counterexamples.push_back({std::move(flag), res});
  }
  return report;
}

}  // namespace finslie
