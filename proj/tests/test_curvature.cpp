#include <gtest/gtest.h>

#include "hypersurf/calculus.hpp"
#include "hypersurf/error.hpp"
#include "hypersurf/parser.hpp"
#include "hypersurf/curvature.hpp"
#include "support/oracle.hpp"

using namespace hypersurf;

namespace {

Polynomial P(const char* text, std::size_t dim = 3) { return parse(text, VarConvention::automatic(dim)); }

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(CmcNumerator, Examples) {
  EXPECT_EQ(cmc_numerator(P("1-x^2-y^2-z^2")), P("16*(x^2+y^2+z^2)"));
  EXPECT_TRUE(cmc_numerator(P("z")).is_zero());
}

TEST(CmcDefect, Examples) {
  const auto s = P("x^2+y^2+z^2");
  const auto sphere = P("1-x^2-y^2-z^2");
  EXPECT_EQ(cmc_defect(sphere, 1), Rational(256) * s * s * sphere);
  const auto q = P("x^3 - y*z + 2");
  EXPECT_EQ(cmc_defect(q, 0), pow(cmc_numerator(q), 2));
  EXPECT_TRUE(cmc_defect(P("z"), 0).is_zero());
}

TEST(MeanCurvature, Examples) {
  EXPECT_NEAR(mean_curvature_at(P("4-x^2-y^2-z^2"), std::vector<double>{2, 0, 0}), 0.5, 1e-15);
  EXPECT_NEAR(mean_curvature_at(P("1-x^2-y^2", 4), std::vector<double>{1, 0, 0, 0}), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(mean_curvature_at(P("z"), std::vector<double>{3, -1, 0}), 0.0);
  EXPECT_THROW(mean_curvature_at(P("x^2+y^2-z^2"), std::vector<double>{0, 0, 0}), DomainError);
}

TEST(MeanCurvature, MatchesFiniteDifferenceOfNormal) {
  oracle::PolyGen gen(12);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const auto p = gen.polynomial(3, 3, 5) + P("x^2+y^2+z^2-2");
    const auto g = gradient(p);
    auto grad = [&](const oracle::Vec& y) {
      oracle::Vec out(3);
      for (int k = 0; k < 3; ++k) out[k] = oracle::eval(g[k], y);
      return out;
    };
    const auto sample = sample_variety(p, 3, 3.0, static_cast<std::uint64_t>(i));
    for (const auto& x : sample.points) {
      const double h = mean_curvature_at(p, x);
      if (oracle::norm(grad(x)) < 1e-2 || std::abs(h) > 1e3) continue;
      EXPECT_NEAR(h, oracle::fd_mean_curvature(grad, x, 1e-4), 1e-5 * (1 + std::abs(h)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(MeanCurvature, SignFlipAndScaling) {
  oracle::PolyGen gen(21);
  for (int i = 0; i < 20; ++i) {
    const auto p = gen.polynomial(3, 4, 5) + P("x^2+y^2+z^2-1");
    const auto lambda = gen.positive_rational(9, 4);
    // G is cubic in P, matching |grad P|^3 in the denominator.
    EXPECT_EQ(cmc_numerator(lambda * p), lambda * lambda * lambda * cmc_numerator(p));
    for (const auto& x : sample_variety(p, 4, 3.0, 5).points) {
      const double h = mean_curvature_at(p, x);
      EXPECT_LE(rel(mean_curvature_at(-p, x), -h), 1e-12);
      EXPECT_LE(rel(mean_curvature_at(lambda * p, x), h), 1e-12);
    }
  }
}

TEST(MeanCurvature, RigidMotionEquivariance) {
  oracle::PolyGen gen(44);
  for (int i = 0; i < 20; ++i) {
    const auto p = gen.polynomial(3, 3, 4) + P("x^2+y^2+z^2-4");
    const auto m = oracle::rational_orthogonal(3, gen.rng);
    const auto b = gen.point(3);
    const auto moved = affine_substitute(p, m, b);
    for (const auto& x : sample_variety(moved, 4, 4.0, 1).points) {
      oracle::Vec y(3, 0.0);
      for (int r = 0; r < 3; ++r) {
        y[r] = b[r].get_d();
        for (int c = 0; c < 3; ++c) y[r] += m(r, c).get_d() * x[c];
      }
      const double hm = mean_curvature_at(moved, x);
      EXPECT_NEAR(hm, mean_curvature_at(p, y), 1e-9 * std::max(1.0, std::abs(hm)));
    }
  }
}

TEST(SampleVariety, Examples) {
  const auto sphere = sample_variety(P("x^2+y^2+z^2-1"), 10, 5.0, 0);
  ASSERT_EQ(sphere.points.size(), 10u);
  for (const auto& x : sphere.points) EXPECT_LE(std::abs(oracle::norm(x) - 1), 1e-9);

  const auto empty = sample_variety(P("x^2+1"), 10, 5.0, 0);
  EXPECT_TRUE(empty.variety_not_found);
  EXPECT_TRUE(empty.points.empty());

  const auto plane = sample_variety(P("z"), 5, 5.0, 0);
  ASSERT_EQ(plane.points.size(), 5u);
  for (const auto& x : plane.points) EXPECT_LE(std::abs(x[2]), 1e-10);
}

TEST(SampleVariety, RejectsSingularPoints) {
  // x^2 + y^2 = 0 in the plane is a single singular point.
  const auto s = sample_variety(P("x^2+y^2", 2), 5, 2.0, 0);
  EXPECT_TRUE(s.points.empty());
  EXPECT_GT(s.rejected_low_gradient + (s.starts - s.converged), 0u);
}

TEST(SampleVariety, Deterministic) {
  const auto p = P("x^4 - y^2 + z^3 - 1");
  const auto a = sample_variety(p, 20, 3.0, 99), b = sample_variety(p, 20, 3.0, 99);
  EXPECT_EQ(a.points, b.points);
}

TEST(NearestPoint, Examples) {
  auto r = nearest_point(P("x^2+y^2+z^2-1"), std::vector<double>{3, 0, 0}, 0);
  EXPECT_NEAR(r.distance, 2.0, 1e-9);
  EXPECT_NEAR(r.point[0], 1.0, 1e-9);
  EXPECT_NEAR(r.point[1], 0.0, 1e-7);
  EXPECT_TRUE(r.converged);

  r = nearest_point(P("z"), std::vector<double>{1, 2, 5}, 0);
  EXPECT_NEAR(r.distance, 5.0, 1e-9);
  EXPECT_NEAR(r.point[0], 1.0, 1e-9);
  EXPECT_NEAR(r.point[1], 2.0, 1e-9);
  EXPECT_NEAR(r.point[2], 0.0, 1e-12);

  r = nearest_point(P("x^2+y^2+z^2-1"), std::vector<double>{0, 0, 0}, 0);
  EXPECT_NEAR(r.distance, 1.0, 1e-9);
  EXPECT_NEAR(oracle::norm(r.point), 1.0, 1e-9);
}

TEST(SnapToRational, Convergents) {
  EXPECT_EQ(*snap_to_rational(0.3333333333, 1e-6), Rational(1, 3));
  EXPECT_EQ(*snap_to_rational(-0.6666666667, 1e-6), Rational(-2, 3));
  EXPECT_EQ(*snap_to_rational(2.0, 1e-9), Rational(2));
  EXPECT_FALSE(snap_to_rational(std::sqrt(2.0), 1e-14, 1000).has_value());
}

TEST(IsCmc, Examples) {
  const auto sphere = P("1-x^2-y^2-z^2");
  const auto r = is_cmc(sphere);
  EXPECT_EQ(r.verdict, CmcVerdict::CmcCertified);
  ASSERT_TRUE(r.c_exact.has_value());
  EXPECT_EQ(*r.c_exact, Rational(1));
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_EQ(*r.certificate, pow(P("16*(x^2+y^2+z^2)"), 2));
  EXPECT_EQ(*r.certificate * sphere, cmc_defect(sphere, 1));

  EXPECT_EQ(is_cmc(P("z-x^2-y^2")).verdict, CmcVerdict::NotCmc);
  const auto plane = is_cmc(P("z"));
  EXPECT_EQ(plane.verdict, CmcVerdict::Minimal);
  EXPECT_EQ(*plane.c_exact, Rational(0));
}

TEST(IsCmc, EmptyVarietyIsInconclusive) {
  const auto r = is_cmc(P("x^2+1"));
  EXPECT_EQ(r.verdict, CmcVerdict::Inconclusive);
  EXPECT_TRUE(r.sampling.variety_not_found);
}

TEST(IsCmc, FailedCertificateIsNumericNotNegative) {
  // M is the unit sphere; the factor x^2+2 has no real zeros but need not divide the defect.
  const auto p = P("(1-x^2-y^2-z^2)*(x^2+2)");
  const auto r = is_cmc(p);
  ASSERT_TRUE(r.c_exact.has_value());
  EXPECT_EQ(*r.c_exact, Rational(1));
  EXPECT_TRUE(r.verdict == CmcVerdict::CmcCertified || r.verdict == CmcVerdict::CmcNumeric);
  if (r.verdict == CmcVerdict::CmcCertified) EXPECT_EQ(*r.certificate * p, cmc_defect(p, 1));
}

TEST(IsCmc, CertificatesAlwaysRecheck) {
  for (const char* text : {"4-x^2-y^2-z^2", "1-x^2-y^2", "(x^2+y^2+z^2-1)*((x-3)^2+y^2+z^2-1)", "x+y-z"}) {
    const auto p = P(text);
    const auto r = is_cmc(p);
    if (r.certificate) EXPECT_EQ(*r.certificate * p, cmc_defect(p, *r.c_exact)) << text;
  }
}
