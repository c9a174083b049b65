#include <gtest/gtest.h>

#include "hypersurf/error.hpp"
#include "hypersurf/parser.hpp"
#include "support/oracle.hpp"

using namespace hypersurf;

namespace {

const VarConvention kNamed2{VarConvention::Mode::Named, 2};
const VarConvention kNamed3{VarConvention::Mode::Named, 3};
const VarConvention kIndexed2{VarConvention::Mode::Indexed, 2};

std::size_t error_position(std::string_view text, const VarConvention& conv) {
  try {
    parse(text, conv);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return 0;
}

}  // namespace

TEST(Parser, NamedTranscription) {
  const auto p = parse("x^2 + 2*x*y - 1", kNamed2);
  EXPECT_EQ(p.term_count(), 3u);
  EXPECT_EQ(p.coefficient({2, 0}), Rational(1));
  EXPECT_EQ(p.coefficient({1, 1}), Rational(2));
  EXPECT_EQ(p.coefficient({0, 0}), Rational(-1));
}

TEST(Parser, IndexedExpansion) {
  const auto p = parse("(x1+x2)^2", kIndexed2);
  Polynomial want(2);
  want.add_term({2, 0}, 1);
  want.add_term({1, 1}, 2);
  want.add_term({0, 2}, 1);
  EXPECT_EQ(p, want);
}

TEST(Parser, RejectsNegativeExponent) {
  EXPECT_THROW(parse("x^(-1)", kNamed2), ParseError);
  EXPECT_EQ(error_position("x^(-1)", kNamed2), 3u);
}

TEST(Parser, RejectsOutsideGrammar) {
  for (const char* bad : {"2x", "x y", "1.5*x", "x^", "(x+1", "x+1)", "", "x/y", "x/0", "x^1001", "x**2", "+", "x^y",
                          "3!", "x^(2"}) {
    EXPECT_THROW(parse(bad, kNamed2), ParseError) << bad;
  }
}

TEST(Parser, ErrorPositions) {
  EXPECT_EQ(error_position("x + * y", kNamed2), 4u);
  EXPECT_EQ(error_position("x + q", kNamed2), 4u);
}

TEST(Parser, VariableOutOfRange) {
  EXPECT_THROW(parse("z", kNamed2), DimensionError);
  EXPECT_THROW(parse("x3", kIndexed2), DimensionError);
  EXPECT_THROW(parse("x0", kIndexed2), ParseError);
}

TEST(Parser, AcceptedForms) {
  EXPECT_EQ(parse(" - - x ", kNamed2), parse("x", kNamed2));
  EXPECT_EQ(parse("x/2 + y*3/4", kNamed2), parse("1/2*x + 3/4*y", kNamed2));
  EXPECT_EQ(parse("(x+1)^(3)", kNamed2), parse("x^3+3*x^2+3*x+1", kNamed2));
  EXPECT_EQ(parse("x^0", kNamed2), parse("1", kNamed2));
  EXPECT_EQ(parse("(x+y)/(1/2)", kNamed2), parse("2*x+2*y", kNamed2));
  EXPECT_TRUE(parse("x - x", kNamed2).is_zero());
}

TEST(Parser, InferDimension) {
  EXPECT_EQ(infer_dimension("y + 1", VarConvention::Mode::Named), 2u);
  EXPECT_EQ(infer_dimension("w", VarConvention::Mode::Named), 4u);
  EXPECT_EQ(infer_dimension("x7 - x2", VarConvention::Mode::Indexed), 7u);
  EXPECT_EQ(infer_dimension("5", VarConvention::Mode::Named), 1u);
}

TEST(Parser, AutomaticConvention) {
  EXPECT_EQ(VarConvention::automatic(4).mode, VarConvention::Mode::Named);
  EXPECT_EQ(VarConvention::automatic(5).mode, VarConvention::Mode::Indexed);
  EXPECT_THROW((VarConvention{VarConvention::Mode::Named, 5}.validate()), DimensionError);
}

TEST(Formatter, Examples) {
  EXPECT_EQ(format(parse("x^2-1", kNamed2), kNamed2), "x^2 - 1");
  EXPECT_EQ(format(Polynomial(2), kNamed2), "0");
  const auto s = format(parse("3/2*x*y", kNamed2), kNamed2);
  EXPECT_NE(s.find("3/2*x*y"), std::string::npos);
  EXPECT_EQ(format(parse("-x^2 + 3/2*x*y - 1", kNamed2), kNamed2), "-x^2 + 3/2*x*y - 1");
  EXPECT_EQ(format(parse("x1*x2 - 2", kIndexed2), kIndexed2), "x1*x2 - 2");
}

TEST(Formatter, RoundTripOnRandomPolynomials) {
  oracle::PolyGen gen(2024);
  for (int i = 0; i < 500; ++i) {
    const std::size_t dim = static_cast<std::size_t>(gen.integer(1, 6));
    const auto conv = (i % 2 == 0 && dim <= 4) ? VarConvention{VarConvention::Mode::Named, dim}
                                               : VarConvention{VarConvention::Mode::Indexed, dim};
    const auto p = gen.polynomial(dim, 6, static_cast<std::size_t>(gen.integer(0, 8)));
    const auto text = format(p, conv);
    EXPECT_EQ(parse(text, conv), p) << text;
  }
}
