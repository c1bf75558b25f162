#include <gtest/gtest.h>

#include "cpa/resolver.hpp"
#include "test_util.hpp"

using namespace cpa;
using cpa::testing::vec;

namespace {

MPoly var(std::size_t n, std::size_t i) { return MPoly::variable(n, i); }
MPoly cst(std::size_t n, long c) { return MPoly::constant(n, c); }

bool has_component(const Resolution& r, const AffineSpace& a) {
  for (const auto& c : r.components)
    if (c == a) return true;
  return false;
}

}  // namespace

TEST(MPoly, SubstituteAndPrint) {
  auto x = var(2, 0), y = var(2, 1);
  auto p = x * x - cst(2, 3) * y + cst(2, 1);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.evaluate(vec({2, 1})), 2);
  EXPECT_EQ(p.to_string(), "t1^2 - 3*t2 + 1");
  // Restrict to the line (s, 2s).
  auto line = p.substitute(vec({0, 0}), {vec({1, 2})});
  EXPECT_EQ(line.nvars(), 1u);
  EXPECT_EQ(line.evaluate(vec({3})), 9 - 18 + 1);
  EXPECT_EQ(MPoly::monomial_key({0, 0, 2}), "t1^2*t3");
}

TEST(LinearFactors, SplitsRationalProducts) {
  auto x = var(2, 0), y = var(2, 1);
  auto f = linear_factors((x - y) * (cst(2, 2) * x + y - cst(2, 1)));
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->size(), 2u);
  EXPECT_FALSE(linear_factors(x * x + y * y).has_value());
  EXPECT_FALSE(linear_factors(x * x - cst(2, 2)).has_value());
}

TEST(Resolve, UnionOfAxes) {
  auto r = resolve({var(2, 0) * var(2, 1)}, 2);
  ASSERT_TRUE(r.resolved) << r.reason;
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_TRUE(has_component(r, AffineSpace(vec({0, 0}), Subspace::span(2, {vec({0, 1})}))));
  EXPECT_TRUE(has_component(r, AffineSpace(vec({0, 0}), Subspace::span(2, {vec({1, 0})}))));
}

TEST(Resolve, PlaneAndLineAreMaximal) {
  auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
  auto r = resolve({x * z, y * z}, 3);
  ASSERT_TRUE(r.resolved);
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.components[0].dim(), 2u);
  EXPECT_EQ(r.components[1].dim(), 1u);
}

TEST(Resolve, UnivariateRoots) {
  auto t = var(1, 0);
  auto r = resolve({t * t - cst(1, 2) * t}, 1);
  ASSERT_TRUE(r.resolved);
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.components[0].point(), vec({0}));
  EXPECT_EQ(r.components[1].point(), vec({2}));
  auto double_root = resolve({t * t}, 1);
  ASSERT_TRUE(double_root.resolved);
  EXPECT_EQ(double_root.components, std::vector<AffineSpace>{AffineSpace::origin(1)});
}

TEST(Resolve, EmptyAndUnresolved) {
  auto t = var(1, 0);
  auto empty = resolve({t - cst(1, 1), t - cst(1, 2)}, 1);
  EXPECT_TRUE(empty.resolved);
  EXPECT_TRUE(empty.components.empty());
  EXPECT_FALSE(resolve({t * t + cst(1, 1)}, 1).resolved);
  EXPECT_FALSE(resolve({t * t - cst(1, 2)}, 1).resolved);
  EXPECT_FALSE(resolve({var(2, 0) * var(2, 0) + var(2, 1) * var(2, 1)}, 2).resolved);
}

TEST(Resolve, TwoVariableResultant) {
  // x^2 + y^2 = 2, x = y^2  =>  y^4 + y^2 - 2 = 0 -> y = +-1, x = 1 (rational part);
  // y^2 = -2 has no complex-rational points so this must stay unresolved.
  auto x = var(2, 0), y = var(2, 1);
  auto r = resolve({x * x + y * y - cst(2, 2), x - y * y}, 2);
  EXPECT_FALSE(r.resolved);
  // x y = 1, x = y  =>  (1, 1), (-1, -1)
  auto s = resolve({x * y - cst(2, 1), x * x - y * y, x + y - cst(2, 2)}, 2);
  ASSERT_TRUE(s.resolved);
  ASSERT_EQ(s.components.size(), 1u);
  EXPECT_EQ(s.components[0].point(), vec({1, 1}));
  // xy = 1, x^2 = y^2 alone: (1,1), (-1,-1) plus x = -y gives -x^2 = 1, no rational points.
  auto u = resolve({x * y - cst(2, 1), x * x - y * y}, 2);
  EXPECT_FALSE(u.resolved);
}
