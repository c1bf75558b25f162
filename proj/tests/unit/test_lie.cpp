#include <gtest/gtest.h>

#include "cpa/catalog.hpp"
#include "cpa/error.hpp"
#include "cpa/lie_structure.hpp"
#include "test_util.hpp"

using namespace cpa;
using cpa::testing::vec;

TEST(LieAlgebra, BracketAndAdjoint) {
  auto h = heisenberg();
  EXPECT_EQ(bracket(h, vec({1, 0, 0}), vec({0, 1, 0})), vec({0, 0, 1}));
  EXPECT_EQ(bracket(h, vec({0, 1, 0}), vec({1, 0, 0})), vec({0, 0, -1}));
  auto ad = adjoint(h, vec({1, 0, 0}));
  EXPECT_EQ(ad * vec({0, 1, 0}), vec({0, 0, 1}));
  EXPECT_TRUE(validate(h).empty());
}

TEST(LieAlgebra, ValidateReportsViolations) {
  LieAlgebra bad("bad", {"a", "b", "c"});
  bad.set_constant(0, 1, 2, 1);  // [a,b] = c but [b,a] = 0
  auto v = validate(bad);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, ViolationKind::Antisymmetry);
  EXPECT_EQ(v[0].i, 0u);
  EXPECT_EQ(v[0].j, 1u);

  LieAlgebra not_jacobi("nj", {"a", "b", "c"});
  not_jacobi.set_bracket(0, 1, vec({0, 0, 1}));
  not_jacobi.set_bracket(1, 2, vec({1, 0, 0}));
  not_jacobi.set_bracket(0, 2, vec({0, 0, 1}));
  auto w = validate(not_jacobi);
  ASSERT_FALSE(w.empty());
  EXPECT_EQ(w[0].kind, ViolationKind::Jacobi);
  EXPECT_THROW(structure_report(not_jacobi), Error);
}

TEST(Structure, Heisenberg) {
  auto r = structure_report(heisenberg());
  EXPECT_TRUE(r.nilpotent);
  EXPECT_TRUE(r.solvable);
  EXPECT_TRUE(r.metabelian);
  EXPECT_FALSE(r.abelian);
  EXPECT_EQ(r.center, Subspace::span(3, {vec({0, 0, 1})}));
  EXPECT_EQ(derivations(heisenberg()).dim(), 6u);
  EXPECT_EQ(inner_derivations(heisenberg()).dim(), 2u);
  EXPECT_FALSE(is_complete(heisenberg()));
}

TEST(Structure, SimpleAndBorel) {
  auto s = structure_report(sl(2));
  EXPECT_TRUE(s.perfect);
  EXPECT_TRUE(s.center.is_zero());
  EXPECT_TRUE(s.radical.is_zero());
  EXPECT_EQ(derivations(sl(2)).dim(), 3u);
  EXPECT_TRUE(is_complete(sl(2)));
  EXPECT_TRUE(is_complete(sl(3)));

  auto b = borel_sl(2);
  EXPECT_EQ(b.basis_bracket(0, 1), vec({-2, 0}));
  EXPECT_EQ(derivations(b).dim(), 2u);
  EXPECT_TRUE(is_complete(b));
  EXPECT_TRUE(is_complete(borel_sl(3)));
  auto rb = structure_report(borel_sl(3));
  EXPECT_TRUE(rb.solvable);
  EXPECT_FALSE(rb.nilpotent);
  EXPECT_FALSE(rb.metabelian);
  EXPECT_TRUE(structure_report(b).metabelian);
}

TEST(Structure, SixDimensionalParabolic) {
  auto g = example_3_6();
  EXPECT_EQ(derived_algebra(g).dim(), 5u);
  EXPECT_EQ(radical(g), Subspace::span(6, {vec({0, 1, 0, 0, 0, 0}), vec({0, 0, 0, 1, 0, 0}), vec({0, 0, 0, 0, 1, 2})}));
  EXPECT_EQ(g.basis_bracket(0, 2), vec({0, 0, 0, 0, 1, 0}));  // [E12, E21] = H1
  EXPECT_TRUE(is_complete(g));
}

TEST(Structure, PerfectNonSemisimple) {
  auto g = sl2_semidirect_V(2);
  auto r = structure_report(g);
  EXPECT_TRUE(r.perfect);
  EXPECT_EQ(r.radical.dim(), 2u);
  EXPECT_EQ(derivations(g).dim(), 6u);
  EXPECT_FALSE(is_complete(g));
}

TEST(Ideals, QuotientAndCenterOf) {
  auto b = borel_sl(3);
  auto d = derived_algebra(b);
  EXPECT_TRUE(is_ideal(b, d));
  auto q = quotient(b, d);
  EXPECT_EQ(q.algebra.dim(), 2u);
  EXPECT_TRUE(structure_report(q.algebra).abelian);
  // Z([b,b]) = span{E13}
  EXPECT_EQ(center_of(b, d), Subspace::span(5, {vec({0, 1, 0, 0, 0})}));
  EXPECT_THROW(quotient(b, Subspace::span(5, {vec({0, 0, 0, 1, 0})})), Error);
}

TEST(Ideals, DirectSum) {
  auto s = direct_sum(heisenberg(), abelian(1));
  EXPECT_EQ(s.dim(), 4u);
  EXPECT_TRUE(validate(s).empty());
  EXPECT_EQ(center(s).dim(), 2u);
}

TEST(FixWitness, KnownIdeals) {
  EXPECT_TRUE(fix_witness_ideal(sl(2)).ideal.is_full());
  EXPECT_TRUE(fix_witness_ideal(heisenberg()).ideal.is_zero());
  for (int n = 2; n <= 4; ++n) {
    auto b = borel_sl(n);
    EXPECT_EQ(fix_witness_ideal(b).ideal, derived_algebra(b)) << n;
  }
  auto g = example_3_6();
  auto res = fix_witness_ideal(g);
  EXPECT_EQ(res.ideal, derived_algebra(g));
  for (const auto& w : res.witnesses) EXPECT_EQ(bracket(g, w.y, w.x), w.x);
}

TEST(Properties, AdjointIsDerivation) {
  for (const auto& key : catalog_examples()) {
    const auto lie = make(key);
    const Subspace der = derivations(lie);
    for (std::size_t i = 0; i < lie.dim(); ++i) {
      const Matrix ad = adjoint(lie, unit_vector(lie.dim(), i));
      Vector flat;
      for (std::size_t r = 0; r < ad.rows(); ++r)
        for (std::size_t c = 0; c < ad.cols(); ++c) flat.push_back(ad(r, c));
      EXPECT_TRUE(der.contains(flat)) << to_string(key) << " e" << i;
    }
    EXPECT_TRUE(der.contains(inner_derivations(lie)));
  }
}

TEST(Properties, RadicalAndDerivedAlgebra) {
  for (const auto& key : catalog_examples()) {
    const auto lie = make(key);
    const auto rep = structure_report(lie);
    EXPECT_TRUE(is_ideal(lie, rep.radical)) << to_string(key);
    if (rep.solvable) EXPECT_TRUE(rep.radical.is_full());
    for (const auto& ideal : standard_ideals(lie)) {
      Subspace d = ideal;
      for (std::size_t k = 0; k <= lie.dim() && !d.is_zero(); ++k) d = bracket_span(lie, d, d);
      if (d.is_zero()) EXPECT_TRUE(rep.radical.contains(ideal)) << to_string(key);
    }
    const Subspace d = derived_algebra(lie);
    if (!rep.radical.is_full()) {
      const auto q = quotient(lie, rep.radical);
      EXPECT_TRUE(radical(q.algebra).is_zero()) << to_string(key);
    }
    EXPECT_TRUE(d.contains(fix_witness_ideal(lie).ideal)) << to_string(key);
  }
}

TEST(Properties, SolvableSumsStaySolvable) {
  const std::vector<LieAlgebra> solvable{abelian(1), heisenberg(), borel_sl(2), borel_sl(3)};
  for (const auto& a : solvable)
    for (const auto& b : solvable) {
      const auto s = direct_sum(a, b);
      EXPECT_TRUE(validate(s).empty());
      EXPECT_TRUE(structure_report(s).solvable) << a.name() << " + " << b.name();
    }
  EXPECT_FALSE(structure_report(direct_sum(sl(2), borel_sl(2))).solvable);
}
