#include <gtest/gtest.h>

#include <cmath>

#include "finslie/classify.hpp"
#include "finslie/flagcurv.hpp"
#include "finslie/sampling.hpp"
#include "oracles.hpp"

namespace finslie {
namespace {

using testing::q;
using testing::rel_err;
using testing::vec;

constexpr std::size_t X = 0, Y = 1, Z = 2, W = 3;

ExactVector e(std::size_t i) { return ExactVector::basis(4, i); }

const MetricTensor kIdentity = MetricTensor::identity(4);

RandersStructure randers(int c, ExactVector field) { return make_randers(catalog(c), kIdentity, std::move(field)); }

struct Sample {
  ExactVector field;
  Flag flag;
};

Sample douglas_sample(int c, std::uint64_t seed, std::uint64_t index) {
  auto rng = sample_engine(seed, index);
  Sample s{random_valid_q(rng, douglas_subspace(catalog(c), kIdentity), kIdentity), {}};
  do {
    s.flag = {random_vector(rng, 4), random_vector(rng, 4)};
  } while (Subspace::span(4, {s.flag.pole, s.flag.transverse}).dim() < 2);
  return s;
}

CaseParameters parameters(int c, const ExactVector& field, const ExactVector& pole) {
  CaseParameters p;
  if (c == 2) {
    p.p = field[Z].to_double();
    p.q = field[W].to_double();
  } else {
    p.q = field[X].to_double();
  }
  p.a = pole[X].to_double();
  p.b = pole[Y].to_double();
  p.c = pole[Z].to_double();
  p.d = pole[W].to_double();
  return p;
}

TEST(UMap, Examples) {
  auto rng = sample_engine(121, 0);
  for (int n = 0; n < 10; ++n)
    EXPECT_TRUE(u_map(catalog(0), kIdentity, random_vector(rng, 4), random_vector(rng, 4)).is_zero());
  EXPECT_EQ(u_map(catalog(2), kIdentity, e(X), e(X)), -e(Z));
}

TEST(UMap, SymmetricBilinearAndMatchesOracle) {
  const MetricTensor skew(ExactMatrix(4, 4, {2, q(1, 2), 0, 0,  //
                                             q(1, 2), 1, q(1, 3), 0,  //
                                             0, q(1, 3), 3, 1,  //
                                             0, 0, 1, 1}));
  for (const MetricTensor& m : {kIdentity, skew}) {
    for (int c : kCatalogCases) {
      const LieAlgebra g = catalog(c);
      for (std::uint64_t n = 0; n < 20; ++n) {
        auto rng = sample_engine(122 + c, n);
        const ExactVector u = random_vector(rng, 4), v = random_vector(rng, 4), w = random_vector(rng, 4);
        const Rational lambda = random_rational(rng);
        const ExactVector uv = u_map(g, m, u, v);
        EXPECT_EQ(uv, u_map(g, m, v, u));
        EXPECT_EQ(u_map(g, m, lambda * u + w, v), lambda * uv + u_map(g, m, w, v));
        EXPECT_EQ(uv, testing::reference_u(g, m, u, v));
        // defining identity against every basis vector
        for (std::size_t r = 0; r < 4; ++r) {
          EXPECT_EQ(Rational(2) * inner(m, uv, e(r)), inner(m, bracket(g, e(r), u), v) + inner(m, bracket(g, e(r), v), u));
        }
      }
    }
  }
}

TEST(Intermediates, CaseTwoExact) {
  const LieAlgebra g = catalog(2);
  for (std::uint64_t n = 0; n < 50; ++n) {
    auto rng = sample_engine(130, n);
    const Rational p = random_rational(rng), qq = random_rational(rng);
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng),
                   d = random_rational(rng);
    const ExactVector Q = vec({0, 0, p, qq}), V = vec({a, b, c, d});
    const Rational s = a * a + b * b;
    const ExactVector qv = bracket(g, Q, V);
    EXPECT_EQ(inner(kIdentity, qv, V), -p * s);
    EXPECT_EQ(inner(kIdentity, bracket(g, qv, V), V), s * (d * qq - c * p));
    EXPECT_EQ(inner(kIdentity, V, bracket(g, Q, ad_star(g, kIdentity, V) * V)), s * (d * qq + c * p));
  }
}

TEST(Intermediates, CasesThreeAndFourExact) {
  for (int c : {3, 4}) {
    const LieAlgebra g = catalog(c);
    for (std::uint64_t n = 0; n < 50; ++n) {
      auto rng = sample_engine(131 + c, n);
      const Rational qq = random_rational(rng);
      const Rational a = random_rational(rng), b = random_rational(rng), cc = random_rational(rng),
                     d = random_rational(rng);
      const ExactVector Q = vec({qq, 0, 0, 0}), V = vec({a, b, cc, d});
      const Rational half(1, 2), quarter(1, 4);
      const Rational s = c == 3 ? b * b + cc * cc + d * d : b * b + half * (cc * cc + d * d);
      const Rational t = c == 3 ? s : b * b + quarter * (cc * cc + d * d);
      const ExactVector qv = bracket(g, Q, V);
      EXPECT_EQ(inner(kIdentity, qv, V), qq * s);
      EXPECT_EQ(inner(kIdentity, bracket(g, qv, V), V), -a * qq * t);
      EXPECT_EQ(inner(kIdentity, V, bracket(g, Q, ad_star(g, kIdentity, V) * V)), a * qq * t);
    }
  }
}

TEST(FlagCurvature, CaseThreeExample) {
  const RandersStructure r = randers(3, q(1, 2) * e(X));
  for (const ExactVector& u : {e(Y), vec({1, 1, 2, -1}), e(W)}) {
    const FlagCurvatureResult dh = flag_curvature_deng_hou(r, {e(X), u});
    const FlagCurvatureResult sf = flag_curvature_simplified(r, {e(X), u});
    EXPECT_NEAR(dh.k_f, -4.0 / 9.0, 1e-15);
    EXPECT_NEAR(sf.k_f, -4.0 / 9.0, 1e-15);
    EXPECT_EQ(dh.exact_k_g, Rational(-1));
    EXPECT_EQ(dh.correction, 0.0);
    EXPECT_DOUBLE_EQ(dh.f_value, 1.5);
  }
}

TEST(FlagCurvature, CaseTwoPoleOutsideTheSignDirections) {
  const RandersStructure r = randers(2, q(1, 2) * e(Z));
  const FlagCurvatureResult res = flag_curvature_simplified(r, {e(X), e(Y)});
  EXPECT_NEAR(res.correction, 3.0 / 16.0, 1e-15);
  EXPECT_NEAR(res.k_f, res.k_g + 3.0 / 16.0, 1e-15);
}

TEST(FlagCurvature, ResultIsInternallyConsistent) {
  for (int c : {2, 3, 4}) {
    for (std::uint64_t n = 0; n < 50; ++n) {
      const Sample s = douglas_sample(c, 140 + c, n);
      const FlagCurvatureResult res = flag_curvature_simplified(randers(c, s.field), s.flag);
      const double expected = res.pole_norm_sq / (res.f_value * res.f_value) * res.k_g + res.correction;
      EXPECT_LE(rel_err(res.k_f, expected), 1e-12);
    }
  }
}

TEST(FlagCurvature, FormulasAgree) {
  for (int c : {2, 3, 4}) {
    for (std::uint64_t n = 0; n < 200; ++n) {
      const Sample s = douglas_sample(c, 150 + c, n);
      const DouglasFlagCurvature eval(randers(c, s.field));
      const FlagCurvatureResult dh = eval.deng_hou(s.flag);
      const FlagCurvatureResult sf = eval.simplified(s.flag);
      EXPECT_LE(rel_err(dh.k_f, sf.k_f), 1e-9) << "case " << c << " sample " << n;
      const double closed = flag_curvature_case(c, parameters(c, s.field, s.flag.pole), sf.k_g);
      EXPECT_LE(rel_err(closed, sf.k_f), 1e-9) << "case " << c << " sample " << n;
    }
  }
}

TEST(FlagCurvature, RiemannianReduction) {
  for (int c : kCatalogCases) {
    const DouglasFlagCurvature eval(randers(c, ExactVector(4)));
    for (std::uint64_t n = 0; n < 50; ++n) {
      const Sample s = douglas_sample(c, 160 + c, n);
      for (const FlagCurvatureResult& res : {eval.deng_hou(s.flag), eval.simplified(s.flag)}) {
        EXPECT_EQ(res.correction, 0.0);
        EXPECT_LE(rel_err(res.k_f, res.k_g), 1e-12);
      }
    }
  }
}

TEST(FlagCurvature, PoleHomogeneity) {
  for (int c : {2, 3, 4}) {
    for (std::uint64_t n = 0; n < 50; ++n) {
      const Sample s = douglas_sample(c, 170 + c, n);
      const DouglasFlagCurvature eval(randers(c, s.field));
      const double base_dh = eval.deng_hou(s.flag).k_f;
      const double base_sf = eval.simplified(s.flag).k_f;
      for (const Rational& lambda : {q(1, 2), q(2), q(10)}) {
        const Flag scaled{lambda * s.flag.pole, s.flag.transverse};
        EXPECT_LE(rel_err(eval.deng_hou(scaled).k_f, base_dh), 1e-12);
        EXPECT_LE(rel_err(eval.simplified(scaled).k_f, base_sf), 1e-12);
      }
    }
  }
}

TEST(FlagCurvature, IndependentOfPlaneCompletion) {
  for (int c : {2, 3, 4}) {
    for (std::uint64_t n = 0; n < 30; ++n) {
      const Sample s = douglas_sample(c, 180 + c, n);
      auto rng = sample_engine(189, n);
      const Rational alpha = random_nonzero_rational(rng), beta = random_rational(rng);
      const Flag other{s.flag.pole, alpha * s.flag.transverse + beta * s.flag.pole};
      const DouglasFlagCurvature eval(randers(c, s.field));
      const FlagCurvatureResult first = eval.simplified(s.flag);
      const FlagCurvatureResult second = eval.simplified(other);
      EXPECT_EQ(first.exact_k_g, second.exact_k_g);
      EXPECT_EQ(first.k_f, second.k_f);
    }
  }
}

TEST(FlagCurvature, Errors) {
  EXPECT_THROW(flag_curvature_deng_hou(randers(2, q(1, 2) * e(X)), {e(Z), e(W)}), NotDouglas);
  EXPECT_THROW(DouglasFlagCurvature(randers(2, q(1, 2) * e(X))), NotDouglas);
  const RandersStructure r = randers(3, q(1, 2) * e(X));
  EXPECT_THROW(flag_curvature_simplified(r, {e(X), q(3) * e(X)}), DegenerateFlag);
  EXPECT_THROW(flag_curvature_simplified(r, {ExactVector(4), e(Y)}), DegenerateFlag);
  EXPECT_THROW(flag_curvature_deng_hou(r, {e(X), ExactVector(4)}), DegenerateFlag);
  EXPECT_THROW(flag_curvature_deng_hou(r, {vec({1, 0}), e(Y)}), DimensionMismatch);
}

TEST(CaseFormula, Examples) {
  CaseParameters two;
  two.p = 0.5;
  two.a = 1.0;
  EXPECT_DOUBLE_EQ(flag_curvature_case_correction(2, two), 3.0 / 16.0);
  EXPECT_DOUBLE_EQ(flag_curvature_case(2, two, -0.25), -0.25 + 3.0 / 16.0);

  CaseParameters three;
  three.q = 0.5;
  three.a = 1.0;
  EXPECT_DOUBLE_EQ(flag_curvature_case(3, three, -1.0), -4.0 / 9.0);

  CaseParameters four;
  four.q = 0.5;
  four.b = 1.0;
  EXPECT_DOUBLE_EQ(flag_curvature_case_correction(4, four), 3.0 / 16.0);
  EXPECT_DOUBLE_EQ(flag_curvature_case(4, four, -1.0), -1.0 + 3.0 / 16.0);
}

TEST(CaseFormula, RejectsInvalidParameters) {
  CaseParameters s;
  s.a = 1.0;
  s.p = 0.8;
  s.q = 0.6;
  EXPECT_THROW(flag_curvature_case(2, s, 0.0), std::invalid_argument);
  s.q = 1.0;
  EXPECT_THROW(flag_curvature_case(3, s, 0.0), std::invalid_argument);
  EXPECT_THROW(flag_curvature_case(1, CaseParameters{}, 0.0), std::invalid_argument);
  EXPECT_THROW(flag_curvature_case(4, CaseParameters{}, 0.0), std::invalid_argument);
}

TEST(SignAnalysis, Examples) {
  const RandersStructure two = randers(2, q(1, 2) * e(Z));
  const FlagCurvatureResult zw = flag_curvature_simplified(two, {e(Z), e(W)});
  EXPECT_EQ(zw.correction, 0.0);
  EXPECT_EQ(sign_of(zw.k_f), zw.exact_k_g.sign());

  const FlagCurvatureResult three = flag_curvature_simplified(randers(3, q(1, 2) * e(X)), {e(X), e(Z)});
  EXPECT_EQ(three.correction, 0.0);
  EXPECT_LT(three.k_f, 0.0);
  EXPECT_LT(three.k_g, 0.0);

  EXPECT_EQ(sign_directions(2, two), Subspace::span(4, {e(Z), e(W)}));
}

TEST(SignAnalysis, SignsAgreeOnSampledFlags) {
  for (int c : {2, 3, 4}) {
    for (std::uint64_t n = 0; n < 5; ++n) {
      auto rng = sample_engine(190 + c, n);
      const ExactVector field = random_valid_q(rng, douglas_subspace(catalog(c), kIdentity), kIdentity);
      if (field.is_zero()) continue;
      const SignReport report = sign_analysis(randers(c, field), c, 100, 7 + n);
      EXPECT_TRUE(report.ok()) << "case " << c;
      EXPECT_EQ(report.samples, 100u);
      EXPECT_LE(report.max_abs_correction, 1e-12);
    }
  }
}

TEST(SignAnalysis, RejectsZeroFieldAndUnknownCase) {
  EXPECT_THROW(sign_analysis(randers(3, ExactVector(4)), 3, 10, 1), std::invalid_argument);
  EXPECT_THROW(sign_directions(1, randers(1, q(1, 2) * e(X))), std::invalid_argument);
}

}  // namespace
}  // namespace finslie
