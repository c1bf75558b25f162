#include <gtest/gtest.h>

#include <random>

#include "cpa/error.hpp"
#include "cpa/polynomial.hpp"
#include "test_util.hpp"

using namespace cpa;
using cpa::testing::random_matrix;

TEST(Polynomial, ArithmeticAndDivision) {
  Polynomial p({-1, 0, 1});  // t^2 - 1
  Polynomial q({1, 1});      // t + 1
  auto [quot, rem] = p.divmod(q);
  EXPECT_EQ(quot, Polynomial({-1, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(gcd(p, Polynomial({1, 2, 1})), q);
  EXPECT_EQ(p(Rational(3)), 8);
  EXPECT_EQ(p.derivative(), Polynomial({0, 2}));
}

TEST(Polynomial, RationalRoots) {
  // (2t - 1)^2 (t + 3) t
  Polynomial p = Polynomial({-1, 2}) * Polynomial({-1, 2}) * Polynomial({3, 1}) * Polynomial({0, 1});
  auto roots = rational_roots(p);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0], (RootMultiplicity{-3, 1}));
  EXPECT_EQ(roots[1], (RootMultiplicity{0, 1}));
  EXPECT_EQ(roots[2], (RootMultiplicity{Rational(1, 2), 2}));
  EXPECT_TRUE(rational_roots(Polynomial({2, 0, 1})).empty());
}

TEST(CharPoly, AgreesWithDeterminantOracle) {
  std::mt19937 rng(21);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      auto m = random_matrix(rng, n, n);
      auto cp = char_poly(m);
      EXPECT_EQ(cp.degree(), static_cast<int>(n));
      for (int t = -2; t <= 2; ++t) {
        Matrix shifted = Rational(t) * Matrix::identity(n) - m;
        EXPECT_EQ(cp(Rational(t)), cpa::testing::determinant(shifted));
      }
      // Cayley-Hamilton
      EXPECT_TRUE(cp(m).is_zero());
    }
  }
}

TEST(Eigen, GeneralizedEigenspacesFillSpace) {
  Matrix m{{2, 1, 0, 0}, {0, 2, 0, 0}, {0, 0, -1, 0}, {0, 0, 5, -1}};
  auto eig = rational_eigen(m);
  ASSERT_TRUE(eig.has_value());
  std::size_t total = 0;
  for (const auto& [root, mult] : *eig) {
    auto g = generalized_eigenspace(m, root);
    EXPECT_EQ(g.dim(), mult);
    total += g.dim();
  }
  EXPECT_EQ(total, 4u);
  EXPECT_EQ(eigenspace(m, 2).dim(), 1u);
  EXPECT_THROW(generalized_eigenspace(m, 7), Error);
  EXPECT_FALSE(rational_eigen(Matrix{{0, -1}, {1, 0}}).has_value());
  EXPECT_FALSE(rational_eigen(Matrix{{0, 2}, {1, 0}}).has_value());
}
