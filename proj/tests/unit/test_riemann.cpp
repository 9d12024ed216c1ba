#include <gtest/gtest.h>

#include "finslie/riemann.hpp"
#include "finslie/sampling.hpp"
#include "oracles.hpp"

namespace finslie {
namespace {

using testing::q;
using testing::vec;

constexpr std::size_t X = 0, Y = 1, Z = 2, W = 3;

ExactVector e(std::size_t i) { return ExactVector::basis(4, i); }

// A non-orthonormal positive definite metric used to exercise the general paths.
MetricTensor skew_metric() {
  return MetricTensor(ExactMatrix(4, 4, {2, q(1, 2), 0, 0,  //
                                         q(1, 2), 1, q(1, 3), 0,  //
                                         0, q(1, 3), 3, 1,  //
                                         0, 0, 1, 1}));
}

TEST(Metric, RejectsIndefiniteAndAsymmetric) {
  EXPECT_THROW(MetricTensor(ExactMatrix(2, 2, {1, 2, 2, 1})), InvalidMetric);
  EXPECT_THROW(MetricTensor(ExactMatrix(2, 2, {1, 0, 1, 1})), InvalidMetric);
  EXPECT_THROW(MetricTensor(ExactMatrix(2, 2, {0, 0, 0, 1})), InvalidMetric);
  EXPECT_NO_THROW(skew_metric());
}

TEST(Inner, Examples) {
  const MetricTensor m = MetricTensor::identity(4);
  EXPECT_EQ(inner(m, e(X), e(X)), Rational(1));
  EXPECT_EQ(inner(m, e(X), e(Y)), Rational(0));
  EXPECT_EQ(inner(m, vec({1, 2, 0, 0}), vec({3, 0, 0, 0})), Rational(3));
  EXPECT_THROW(inner(m, vec({1, 2}), e(X)), DimensionMismatch);
}

TEST(AdStar, Examples) {
  const MetricTensor m = MetricTensor::identity(4);
  EXPECT_EQ(ad_star(catalog(0), m, vec({1, 2, 3, 4})), ExactMatrix(4, 4));

  const ExactMatrix a = ad_star(catalog(3), m, e(Y));
  EXPECT_EQ(a * e(Y), -e(X));
  EXPECT_TRUE((a * e(X)).is_zero());
  EXPECT_TRUE((a * e(Z)).is_zero());
  EXPECT_TRUE((a * e(W)).is_zero());

  auto rng = sample_engine(21, 0);
  const LieAlgebra g1 = catalog(1);
  for (int n = 0; n < 10; ++n) {
    const ExactVector v = random_vector(rng, 4);
    EXPECT_EQ(ad_star(g1, m, v), -g1.ad(v));
  }
}

TEST(AdStar, DefiningIdentityWithGeneralMetric) {
  const MetricTensor m = skew_metric();
  for (int c : kCatalogCases) {
    const LieAlgebra g = catalog(c);
    for (std::uint64_t i = 0; i < 10; ++i) {
      auto rng = sample_engine(22, i);
      const ExactVector v = random_vector(rng, 4), w = random_vector(rng, 4), s = random_vector(rng, 4);
      EXPECT_EQ(inner(m, ad_star(g, m, v) * w, s), inner(m, w, bracket(g, v, s)));
    }
  }
}

TEST(LeviCivita, Examples) {
  const MetricTensor m = MetricTensor::identity(4);
  const ConnectionTable flat = levi_civita(catalog(0), m);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_TRUE(flat(i, j).is_zero());

  const ConnectionTable c3 = levi_civita(catalog(3), m);
  EXPECT_EQ(c3(Y, Y), e(X));
  EXPECT_TRUE(c3(X, Y).is_zero());

  const ConnectionTable c1 = levi_civita(catalog(1), m);
  EXPECT_EQ(c1(Y, Z), q(1, 2) * e(W));
}

TEST(LeviCivita, TorsionFreeMetricCompatibleAndKoszul) {
  for (const MetricTensor& m : {MetricTensor::identity(4), skew_metric()}) {
    for (int c : kCatalogCases) {
      const LieAlgebra g = catalog(c);
      const ConnectionTable conn = levi_civita(g, m);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          EXPECT_EQ(conn(i, j) - conn(j, i), g.basis_bracket(i, j));
          for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_TRUE((inner(m, conn(i, j), e(k)) + inner(m, e(j), conn(i, k))).is_zero());
            EXPECT_EQ(Rational(2) * inner(m, conn(i, j), e(k)), testing::koszul_rhs(g, m, e(i), e(j), e(k)));
          }
        }
    }
  }
}

TEST(Curvature, Examples) {
  const MetricTensor m = MetricTensor::identity(4);
  const RiemannianGeometry flat(catalog(0), m);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) EXPECT_TRUE(flat.curvature()(i, j, k).is_zero());

  const RiemannianGeometry g3(catalog(3), m);
  EXPECT_EQ(g3.curvature()(X, Y, Y), -e(X));

  const RiemannianGeometry g1(catalog(1), m);
  EXPECT_EQ(g1.curvature()(Y, Z, Z), q(1, 4) * e(Y));
}

TEST(Curvature, AntisymmetryBianchiAndPairSymmetry) {
  for (const MetricTensor& m : {MetricTensor::identity(4), skew_metric()}) {
    for (int c : kCatalogCases) {
      const RiemannianGeometry geo(catalog(c), m);
      const CurvatureTable& R = geo.curvature();
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_TRUE((R(i, j, k) + R(j, i, k)).is_zero());
            EXPECT_TRUE((R(i, j, k) + R(j, k, i) + R(k, i, j)).is_zero());
          }
      for (std::uint64_t n = 0; n < 10; ++n) {
        auto rng = sample_engine(31 + c, n);
        const ExactVector u = random_vector(rng, 4), v = random_vector(rng, 4), w = random_vector(rng, 4),
                          s = random_vector(rng, 4);
        EXPECT_EQ(inner(m, R.apply(u, v, w), s), inner(m, R.apply(w, s, u), v));
      }
    }
  }
}

TEST(SectionalCurvature, Examples) {
  const MetricTensor m = MetricTensor::identity(4);
  EXPECT_EQ(sectional_curvature(catalog(3), m, e(X), e(Y)), Rational(-1));
  EXPECT_EQ(sectional_curvature(catalog(1), m, e(Y), e(Z)), q(1, 4));
  EXPECT_EQ(sectional_curvature(catalog(1), m, e(X), e(Y)), Rational(0));
  EXPECT_EQ(sectional_curvature(catalog(0), m, vec({1, 2, 3, 4}), vec({0, 1, 0, -1})), Rational(0));
}

TEST(SectionalCurvature, DegeneratePlane) {
  const MetricTensor m = MetricTensor::identity(4);
  EXPECT_THROW(sectional_curvature(catalog(3), m, e(X), q(2) * e(X)), DegeneratePlane);
  EXPECT_THROW(sectional_curvature(catalog(3), m, e(X), ExactVector(4)), DegeneratePlane);
}

TEST(SectionalCurvature, CaseThreeIsConstantMinusOne) {
  const RiemannianGeometry geo(catalog(3), MetricTensor::identity(4));
  for (std::uint64_t n = 0; n < 100; ++n) {
    auto rng = sample_engine(41, n);
    const ExactVector u = random_vector(rng, 4), v = random_vector(rng, 4);
    if (Subspace::span(4, {u, v}).dim() < 2) continue;
    EXPECT_EQ(geo.sectional_curvature(u, v), Rational(-1));
  }
}

TEST(SectionalCurvature, MatchesBracketFormulaOracle) {
  for (const MetricTensor& m : {MetricTensor::identity(4), skew_metric()}) {
    for (int c : kCatalogCases) {
      const LieAlgebra g = catalog(c);
      const RiemannianGeometry geo(g, m);
      for (std::uint64_t n = 0; n < 25; ++n) {
        auto rng = sample_engine(51 + c, n);
        const ExactVector u = random_vector(rng, 4), v = random_vector(rng, 4);
        if (Subspace::span(4, {u, v}).dim() < 2) continue;
        EXPECT_EQ(geo.sectional_curvature(u, v), testing::milnor_sectional_curvature(g, m, u, v))
            << "case " << c;
      }
    }
  }
}

TEST(SectionalCurvature, InvariantUnderChangeOfPlaneBasis) {
  for (int c : kCatalogCases) {
    const RiemannianGeometry geo(catalog(c), skew_metric());
    for (std::uint64_t n = 0; n < 20; ++n) {
      auto rng = sample_engine(61 + c, n);
      const ExactVector u = random_vector(rng, 4), v = random_vector(rng, 4);
      const Rational a = random_rational(rng), b = random_rational(rng), cc = random_rational(rng),
                     d = random_rational(rng);
      if (Subspace::span(4, {u, v}).dim() < 2 || (a * d - b * cc).is_zero()) continue;
      EXPECT_EQ(geo.sectional_curvature(u, v), geo.sectional_curvature(a * u + b * v, cc * u + d * v));
    }
  }
}

}  // namespace
}  // namespace finslie
