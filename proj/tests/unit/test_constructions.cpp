#include <gtest/gtest.h>

#include <functional>

#include "cpa/catalog.hpp"
#include "cpa/constructions.hpp"
#include "cpa/error.hpp"
#include "cpa/inner.hpp"
#include "cpa/lie_structure.hpp"
#include "cpa/suite.hpp"
#include "test_util.hpp"

using namespace cpa;
using cpa::testing::vec;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Format;
}

}  // namespace

TEST(Cocycle, Spaces) {
  const auto b3 = borel_sl(3);
  EXPECT_EQ(cocycle_space(b3, derived_algebra(b3)).size(), 1u);
  const auto g = example_3_6();
  EXPECT_TRUE(cocycle_space(g, derived_algebra(g)).empty());
  // sl(2) + K with I = sl(2): abelian quotient, Z(I) = 0.
  const auto s = direct_sum(sl(2), abelian(1));
  const Subspace i = Subspace::span(4, {unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 2)});
  EXPECT_TRUE(cocycle_space(s, i).empty());
  EXPECT_EQ(code_of([] { cocycle_space(sl(2), Subspace::zero(3)); }), ErrorCode::QuotientNotAbelian);
  EXPECT_EQ(code_of([] { cocycle_space(heisenberg(), Subspace::span(3, {vec({1, 0, 0})})); }),
            ErrorCode::NotAnIdeal);
}

TEST(Cocycle, ProductsAreAssociativeNilInner) {
  const auto b3 = borel_sl(3);
  const Subspace i = derived_algebra(b3);
  for (const auto& f : cocycle_space(b3, i)) {
    const auto p = cocycle_product(b3, i, f);
    EXPECT_TRUE(verify_cpa(b3, p).ok());
    EXPECT_TRUE(is_associative(p));
    const auto w = detect_inner(b3, p);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->nil_inner);
  }
  Matrix bad(5, 2);
  bad(1, 0) = 1;  // f(h1) = z, f(h2) = 0 breaks the symmetric condition
  EXPECT_EQ(code_of([&] { cocycle_product(b3, i, bad); }), ErrorCode::NotACocycle);
  Matrix outside(5, 2);
  outside(0, 0) = 1;
  EXPECT_EQ(code_of([&] { cocycle_product(b3, i, outside); }), ErrorCode::NotACocycle);
}

TEST(CentralZ, BorelTable) {
  const auto b3 = borel_sl(3);
  const Subspace i = derived_algebra(b3);
  const auto p = central_z_product(b3, i, unit_vector(5, 1));
  CPAProduct expected(5);
  expected.set(3, 3, unit_vector(5, 1));
  expected.set(4, 4, unit_vector(5, 1));
  expected.set(3, 4, unit_vector(5, 1));
  EXPECT_EQ(p, expected);
  EXPECT_TRUE(central_z_product(b3, i, Vector(5)).is_zero());
  const auto g = example_3_6();
  EXPECT_TRUE(central_z_product(g, derived_algebra(g), Vector(6)).is_zero());
  EXPECT_EQ(code_of([&] { central_z_product(b3, i, unit_vector(5, 0)); }), ErrorCode::NotCentralInI);
}

TEST(Eigenfunctional, Examples) {
  const auto b = borel_sl(2);
  const auto ef = lie_eigenfunctional_product(b, vec({1, 0}));
  EXPECT_EQ(ef.lambda, vec({0, 2}));
  EXPECT_EQ(ef.product.basis_product(1, 1), vec({4, 0}));
  EXPECT_EQ(ef.product.basis_product(0, 1), vec({0, 0}));
  const auto central = lie_eigenfunctional_product(heisenberg(), vec({0, 0, 1}));
  EXPECT_EQ(central.lambda, vec({0, 0, 0}));
  EXPECT_TRUE(central.product.is_zero());
  EXPECT_EQ(code_of([&] { lie_eigenfunctional_product(b, vec({0, 1})); }), ErrorCode::NotCommonEigenvector);
  EXPECT_EQ(code_of([&] { lie_eigenfunctional_product(b, vec({0, 0})); }), ErrorCode::NotCommonEigenvector);
  const auto s = direct_sum(sl(2), abelian(1));
  EXPECT_EQ(code_of([&] { lie_eigenfunctional_product(s, unit_vector(4, 3)); }), ErrorCode::NotSolvable);
}

TEST(Eigenfunctional, SearchFindsEigenvectors) {
  for (int n = 2; n <= 4; ++n) {
    const auto b = borel_sl(n);
    const auto v = find_common_eigenvector(b);
    ASSERT_TRUE(v.has_value());
    const auto ef = lie_eigenfunctional_product(b, *v);
    EXPECT_TRUE(verify_cpa(b, ef.product).ok());
    EXPECT_FALSE(ef.product.is_zero());  // trivial center
  }
  EXPECT_FALSE(find_common_eigenvector(sl(2)).has_value());
}

TEST(CenterConstruction, Examples) {
  const auto hc = center_construction(heisenberg());
  EXPECT_TRUE(hc.z_in_derived);
  CPAProduct he(3);
  he.set(0, 0, vec({0, 0, 1}));
  EXPECT_EQ(hc.product, he);
  const auto ac = center_construction(abelian(2));
  EXPECT_FALSE(ac.z_in_derived);
  CPAProduct ae(2);
  ae.set(0, 0, vec({1, 0}));
  EXPECT_EQ(ac.product, ae);
  // Both cases on a larger algebra: heisenberg + K has z in [L,L].
  const auto s = direct_sum(heisenberg(), abelian(1));
  const auto sp = center_construction_product(s);
  EXPECT_TRUE(verify_cpa(s, sp).ok());
  EXPECT_TRUE(is_associative(sp));
  EXPECT_FALSE(sp.is_zero());
  EXPECT_EQ(code_of([] { center_construction(sl(2)); }), ErrorCode::IsPerfect);
  EXPECT_EQ(code_of([] { center_construction(borel_sl(2)); }), ErrorCode::TrivialCenter);
}

TEST(Componentwise, Examples) {
  const auto b = borel_sl(2);
  const auto [s1, p1] = componentwise_product(b, borel_sl2_product(2, 0), b, borel_sl2_product(2, 0));
  EXPECT_EQ(s1.dim(), 4u);
  EXPECT_TRUE(verify_cpa(s1, p1).ok());
  const auto [s2, p2] = componentwise_product(b, borel_sl2_product(2, 0), heisenberg(), heisenberg_a_mu(1));
  EXPECT_EQ(s2.dim(), 5u);
  EXPECT_TRUE(verify_cpa(s2, p2).ok());
  const auto [s3, p3] = componentwise_product(b, CPAProduct(2), b, CPAProduct(2));
  EXPECT_TRUE(p3.is_zero());
  EXPECT_EQ(code_of([&] { componentwise_product(b, borel_sl2_product(1, 0), b, CPAProduct(2)); }),
            ErrorCode::NotACPA);
}
