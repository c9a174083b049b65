#include <gtest/gtest.h>

#include "hypersurf/linalg.hpp"
#include "support/oracle.hpp"

using namespace hypersurf;

namespace {

RationalMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

RationalMatrix random_symmetric(oracle::PolyGen& gen, std::size_t n, int zero_rows) {
  RationalMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = static_cast<int>(i) < zero_rows ? Rational(0) : gen.rational(4, 2);
  RationalMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = gen.rational(3, 1);
  return b.transpose() * d * b;
}

}  // namespace

TEST(Linalg, RankAndKernel) {
  const auto m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(m), 2u);
  const auto ker = kernel_basis(m);
  ASSERT_EQ(ker.size(), 1u);
  for (const auto& v : m * ker[0]) EXPECT_EQ(v, 0);
  EXPECT_EQ(rank(RationalMatrix::identity(4)), 4u);
  EXPECT_TRUE(kernel_basis(RationalMatrix::identity(3)).empty());
}

TEST(Linalg, Solve) {
  const auto m = from_rows({{2, 1}, {1, 3}});
  const auto x = solve(m, {Rational(3), Rational(5)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rational(4, 5));
  EXPECT_EQ((*x)[1], Rational(7, 5));
  EXPECT_FALSE(solve(from_rows({{1, 1}, {1, 1}}), {Rational(1), Rational(2)}).has_value());
  const auto y = solve(from_rows({{1, 1}, {1, 1}}), {Rational(2), Rational(2)});
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ((*y)[0] + (*y)[1], Rational(2));
}

TEST(Linalg, CongruenceDiagonalizationIsExact) {
  oracle::PolyGen gen(77);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    const auto a = random_symmetric(gen, n, gen.integer(0, 2));
    const auto d = congruence_diagonalize(a);
    RationalMatrix diag(n, n);
    for (std::size_t j = 0; j < n; ++j) diag(j, j) = d.diagonal[j];
    EXPECT_EQ(d.transform.transpose() * a * d.transform, diag);
    EXPECT_EQ(rank(d.transform), n);
    const auto in = inertia(d);
    EXPECT_EQ(in.positive + in.negative, rank(a));
    EXPECT_EQ(in.zero, n - rank(a));
  }
}

TEST(Linalg, ZeroDiagonalPivot) {
  const auto a = from_rows({{0, 1}, {1, 0}});
  const auto in = inertia(congruence_diagonalize(a));
  EXPECT_EQ(in.positive, 1u);
  EXPECT_EQ(in.negative, 1u);
}
