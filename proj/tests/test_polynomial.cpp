#include <gtest/gtest.h>

#include "hypersurf/error.hpp"
#include "hypersurf/parser.hpp"
#include "hypersurf/polynomial.hpp"
#include "support/oracle.hpp"

using namespace hypersurf;

namespace {

Polynomial P(const char* text, std::size_t dim = 3) { return parse(text, VarConvention::automatic(dim)); }

}  // namespace

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(to_fraction_string(Rational(5)), "5/1");
  EXPECT_EQ(to_fraction_string(parse_rational("-4/6")), "-2/3");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Polynomial, Multiplication) {
  EXPECT_EQ(P("x+1") * P("x-1"), P("x^2-1"));
  const auto p = P("3*x*y - z^2 + 1/2");
  EXPECT_TRUE((p + Rational(-1) * p).is_zero());
  EXPECT_EQ(pow(P("x+y", 2), 2), P("x^2+2*x*y+y^2", 2));
}

TEST(Polynomial, Evaluation) {
  const auto s = P("x^2+y^2+z^2-1");
  const RationalVector e1{1, 0, 0}, q{3, 4, 0};
  EXPECT_EQ(s.evaluate(e1), Rational(0));
  EXPECT_EQ(s.evaluate(q), Rational(24));
  const std::vector<double> xd{3.0, 4.0, 0.0};
  EXPECT_DOUBLE_EQ(s.evaluate(xd), 24.0);
  EXPECT_EQ(Polynomial(3).evaluate(q), Rational(0));
}

TEST(Polynomial, DegreeQueries) {
  EXPECT_FALSE(Polynomial(2).degree().has_value());
  EXPECT_EQ(*P("x^3*y + z").degree(), 4u);
  EXPECT_EQ(P("x^3*y + z").degree_in(0), 3u);
  EXPECT_TRUE(P("x^2 - y*z").is_homogeneous());
  EXPECT_FALSE(P("x^2 - 1").is_homogeneous());
  EXPECT_EQ(P("x - 2*y + 3").l1_norm(), Rational(6));
}

TEST(Polynomial, DimensionMismatchThrows) {
  EXPECT_THROW(P("x", 2) + P("x", 3), DimensionError);
}

TEST(Polynomial, RingLawsOnRandomOperands) {
  oracle::PolyGen gen(11);
  for (int i = 0; i < 100; ++i) {
    const std::size_t dim = static_cast<std::size_t>(gen.integer(1, 4));
    const auto a = gen.polynomial(dim, 3, 4), b = gen.polynomial(dim, 3, 4), c = gen.polynomial(dim, 2, 3);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(ExactDivide, Examples) {
  auto r = exact_divide(P("x^2*y+2*x^2-y-2", 2), P("x^2-1", 2), 0);
  EXPECT_EQ(r.quotient, P("y+2", 2));
  EXPECT_TRUE(r.remainder.is_zero());

  r = exact_divide(P("x^2*y+1", 2), P("x^2-1", 2), 0);
  EXPECT_EQ(r.quotient, P("y", 2));
  EXPECT_EQ(r.remainder, P("y+1", 2));

  r = exact_divide(P("y", 2), P("x^2-1", 2), 0);
  EXPECT_TRUE(r.quotient.is_zero());
  EXPECT_EQ(r.remainder, P("y", 2));
}

TEST(ExactDivide, RejectsNonConstantLeadingCoefficient) {
  EXPECT_THROW(exact_divide(P("x^2", 2), P("x*y+1", 2), 0), DomainError);
  EXPECT_THROW(exact_divide(P("x^2", 2), Polynomial(2), 0), DomainError);
}

TEST(ExactDivide, DivisionIdentityHolds) {
  oracle::PolyGen gen(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t dim = static_cast<std::size_t>(gen.integer(1, 4));
    const std::size_t var = static_cast<std::size_t>(gen.integer(0, static_cast<int>(dim) - 1));
    Polynomial q = gen.polynomial(dim, 2, 3);
    Exponents lead(dim, 0);
    lead[var] = static_cast<std::uint32_t>(gen.integer(1, 3));
    // Force a constant leading coefficient: x_var^d beats every other term in x_var.
    Polynomial trimmed(dim);
    for (const auto& [e, c] : q.terms()) {
      if (e[var] < lead[var]) trimmed.add_term(e, c);
    }
    trimmed.add_term(lead, gen.nonzero_rational());
    const auto p = gen.polynomial(dim, 5, 6);
    const auto r = exact_divide(p, trimmed, var);
    EXPECT_EQ(trimmed * r.quotient + r.remainder, p);
    if (!r.remainder.is_zero()) EXPECT_LT(r.remainder.degree_in(var), trimmed.degree_in(var));
  }
}

TEST(SphereDivision, Examples) {
  const auto two = P("(x^2+y^2+z^2-1)*((x-3)^2+y^2+z^2-1)");
  SphereQuadric unit{2, {0, 0, 0}, 1, 0};
  const auto q = divide_by_sphere_quadric(two, unit);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, P("(x-3)^2+y^2+z^2-1"));

  SphereQuadric circle{1, {0, 0}, 1, 0};
  const auto one = divide_by_sphere_quadric(P("x^2+y^2-1"), circle);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(*one, P("1"));
  EXPECT_FALSE(divide_by_sphere_quadric(P("x+y"), circle).has_value());
}

TEST(SphereDivision, BlockOffsetAndValidation) {
  SphereQuadric q{1, {1, Rational(1, 2)}, 2, 1};
  EXPECT_EQ(q.expand(3), P("(y-1)^2 + (z-1/2)^2 - 2"));
  SphereQuadric too_long{2, {0, 0, 0}, 1, 1};
  EXPECT_THROW(too_long.validate(3), DimensionError);
  SphereQuadric bad_radius{1, {0, 0}, 0, 0};
  EXPECT_THROW(bad_radius.validate(3), DomainError);
}

TEST(SphereDivision, RoundTripOnRandomFactors) {
  oracle::PolyGen gen(17);
  for (int i = 0; i < 200; ++i) {
    const std::size_t dim = static_cast<std::size_t>(gen.integer(3, 5));
    SphereQuadric q;
    q.k = static_cast<std::size_t>(gen.integer(1, static_cast<int>(dim) - 1));
    q.first_var = static_cast<std::size_t>(gen.integer(0, static_cast<int>(dim - q.k - 1)));
    q.center.clear();
    for (std::size_t j = 0; j <= q.k; ++j) q.center.push_back(gen.rational(3, 3));
    q.radius_sq = gen.positive_rational(9, 4);
    const auto r = gen.polynomial(dim, 4, 5);
    const auto product = q.expand(dim) * r;
    const auto back = divide_by_sphere_quadric(product, q);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, r);
    EXPECT_FALSE(divide_by_sphere_quadric(product + Polynomial::constant(dim, 1), q).has_value());
  }
}

TEST(NumericPolynomial, MatchesDirectEvaluation) {
  oracle::PolyGen gen(3);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 50; ++i) {
    const auto p = gen.polynomial(3, 5, 6);
    const NumericPolynomial np(p);
    std::vector<double> x{u(rng), u(rng), u(rng)};
    EXPECT_NEAR(np(x), oracle::eval(p, x), 1e-9 * (1 + std::abs(oracle::eval(p, x))));
    EXPECT_GE(np.term_magnitude(x), std::abs(np(x)) - 1e-12);
  }
}
