#include <gtest/gtest.h>

#include <random>

#include "cpa/error.hpp"
#include "cpa/linalg.hpp"
#include "cpa/rational.hpp"
#include "test_util.hpp"

using namespace cpa;
using cpa::testing::random_matrix;
using cpa::testing::vec;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("+7")), "7");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("1.5"), Error);
  EXPECT_THROW(parse_rational(""), Error);
  EXPECT_THROW(parse_rational("/3"), Error);
}

TEST(Matrix, ArithmeticAndShapes) {
  Matrix a{{1, 2}, {3, 4}};
  Matrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (Matrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), (Matrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(a.trace(), 5);
  EXPECT_EQ(b.pow(2), Matrix::identity(2));
  EXPECT_EQ(a * vec({1, -1}), vec({-1, -1}));
  EXPECT_THROW(a * Matrix(3, 1), Error);
  EXPECT_THROW(a + Matrix(2, 3), Error);
  EXPECT_THROW(Matrix(2, 3).pow(2), Error);
}

TEST(Rref, KnownExample) {
  Matrix m{{0, 2, 4}, {1, 1, 1}, {2, 4, 6}};
  auto r = rref(m);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.matrix, (Matrix{{1, 0, -1}, {0, 1, 2}, {0, 0, 0}}));
}

TEST(Rref, IdempotentOnRandomMatrices) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    auto m = random_matrix(rng, r, c);
    auto once = rref(m);
    auto twice = rref(once.matrix);
    EXPECT_EQ(once.matrix, twice.matrix);
    EXPECT_EQ(once.rank, twice.rank);
  }
}

TEST(Kernel, RankNullityAndAnnihilation) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    auto m = random_matrix(rng, r, c, -2, 2);
    auto k = kernel(m);
    EXPECT_EQ(k.dim() + rref(m).rank, c);
    for (const auto& v : k.vectors()) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST(SolveAffine, RoundTrip) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    auto m = random_matrix(rng, r, c);
    auto x = random_matrix(rng, c, 1).column(0);
    auto b = m * x;
    auto sol = solve_affine(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m * sol->particular, b);
    EXPECT_TRUE(sol->kernel.contains(sub(x, sol->particular)));
  }
  EXPECT_FALSE(solve_affine(Matrix{{1, 1}, {1, 1}}, vec({0, 1})).has_value());
}

TEST(Subspace, SumIntersectContain) {
  auto a = Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  auto b = Subspace::span(3, {vec({0, 1, 1}), vec({0, 0, 1})});
  EXPECT_EQ((a + b).dim(), 3u);
  auto c = intersect(a, b);
  EXPECT_EQ(c.dim(), 1u);
  EXPECT_TRUE(c.contains(vec({0, 5, 0})));
  EXPECT_TRUE(a.contains(c));
  EXPECT_FALSE(c.contains(a));
  EXPECT_EQ(a.coordinates(vec({2, -3, 0})), vec({2, -3}));
  EXPECT_EQ(kernel(Matrix(a.equations())).dim(), 2u);
  // Same span from different generators gives the same canonical basis.
  EXPECT_EQ(a, Subspace::span(3, {vec({1, 1, 0}), vec({1, -1, 0}), vec({2, 0, 0})}));
}
