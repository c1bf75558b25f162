#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "cpa/catalog.hpp"
#include "cpa/classify.hpp"
#include "cpa/constructions.hpp"
#include "cpa/error.hpp"
#include "cpa/lie_structure.hpp"
#include "cpa/suite.hpp"
#include "test_util.hpp"

using namespace cpa;
using cpa::testing::vec;

namespace {

Subspace span_units(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> v;
  for (auto i : idx) v.push_back(unit_vector(n, i));
  return Subspace::span(n, v);
}

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

TEST(Verify, HeisenbergFamilyAndZero) {
  const auto h = heisenberg();
  EXPECT_TRUE(verify_cpa(h, heisenberg_a_mu(1)).ok());
  EXPECT_TRUE(verify_cpa(h, CPAProduct(3)).ok());
  EXPECT_TRUE(verify_cpa(sl(3), CPAProduct(8)).ok());
  EXPECT_EQ(code_of([&] { verify_cpa(h, CPAProduct(2)); }), ErrorCode::DimensionMismatch);
}

TEST(Verify, DerivationViolationTriple) {
  CPAProduct p(3);
  p.set(0, 0, vec({1, 0, 0}));
  const auto r = verify_cpa(heisenberg(), p);
  EXPECT_TRUE(r.commutativity_ok);
  EXPECT_TRUE(r.bracket_action_ok);
  EXPECT_FALSE(r.derivation_ok);
  ASSERT_TRUE(r.first_violation.has_value());
  EXPECT_EQ(r.first_violation->axiom, Axiom::Derivation);
  EXPECT_EQ(r.first_violation->x, 0u);
  EXPECT_EQ(r.first_violation->y, 0u);
  EXPECT_EQ(r.first_violation->z, 1u);
  // e1·[e1,e2] - [e1·e1, e2] - [e1, e1·e2] = 0 - e3 - 0
  EXPECT_EQ(r.first_violation->residual, vec({0, 0, -1}));
}

TEST(Verify, BracketActionViolation) {
  // α = 1 is outside α(α - 2) = 0 but satisfies the linear axioms.
  const auto r = verify_cpa(borel_sl(2), borel_sl2_product(1, 0));
  EXPECT_TRUE(r.derivation_ok);
  EXPECT_FALSE(r.bracket_action_ok);
  EXPECT_EQ(r.first_violation->axiom, Axiom::BracketAction);
}

TEST(Chain, Heisenberg) {
  const auto h = heisenberg();
  const auto c = ideal_chain(h, heisenberg_a_mu(1));
  ASSERT_EQ(c.chain.size(), 4u);
  EXPECT_EQ(c.chain[1], span_units(3, {2}));
  EXPECT_EQ(c.chain[2], span_units(3, {1, 2}));
  EXPECT_TRUE(c.i_infinity.is_full());
  EXPECT_EQ(c.k_stable, 3u);
  EXPECT_EQ(c.nilpotency_index, 2u);
  EXPECT_TRUE(c.nondegenerate);
  EXPECT_EQ(annihilator(heisenberg_a_mu(1)), span_units(3, {2}));
}

TEST(Chain, ZeroProductAndNondegenerateBorel) {
  const auto z = ideal_chain(sl(2), CPAProduct(3));
  ASSERT_EQ(z.chain.size(), 2u);
  EXPECT_TRUE(z.chain[1].is_full());
  EXPECT_EQ(z.k_stable, 1u);
  EXPECT_EQ(z.nilpotency_index, 1u);

  const auto b = ideal_chain(borel_sl(2), borel_sl2_product(2, 0));
  EXPECT_TRUE(annihilator(borel_sl2_product(2, 0)).is_zero());
  EXPECT_TRUE(b.i_infinity.is_zero());
  EXPECT_TRUE(b.nondegenerate);
  EXPECT_EQ(code_of([] { ideal_chain(borel_sl(2), borel_sl2_product(1, 0)); }), ErrorCode::NotACPA);
}

TEST(QuotientCPA, Examples) {
  const auto h = heisenberg();
  const auto p = heisenberg_a_mu(1);
  EXPECT_EQ(quotient_cpa(h, p, Subspace::full(3)).algebra.dim(), 0u);
  const auto q = quotient_cpa(h, p, span_units(3, {2}));
  CPAProduct expected(2);
  expected.set(0, 0, vec({0, 1}));
  EXPECT_EQ(q.product, expected);
  EXPECT_TRUE(structure_report(q.algebra).abelian);
  const auto b3 = borel_sl(3);
  const auto zq = quotient_cpa(b3, CPAProduct(5), derived_algebra(b3));
  EXPECT_TRUE(zq.product.is_zero());
  EXPECT_EQ(code_of([&] { quotient_cpa(h, p, span_units(3, {0, 2})); }), ErrorCode::NotATwoSidedIdeal);
  EXPECT_EQ(code_of([&] { quotient_cpa(h, p, span_units(3, {0})); }), ErrorCode::NotATwoSidedIdeal);
}

TEST(LinearPart, Dimensions) {
  EXPECT_EQ(solve_linear_part(abelian(1)).size(), 1u);
  EXPECT_EQ(solve_linear_part(sl(2)).size(), 0u);
  EXPECT_EQ(solve_linear_part(heisenberg()).size(), 9u);
  // Derivation products on borel_sl(2) also allow e1·e1 = t e1; only the
  // quadratic axiom removes that direction.
  const auto b = solve_linear_part(borel_sl(2));
  EXPECT_EQ(b.size(), 3u);
  std::vector<Vector> flats;
  for (const auto& p : b) flats.push_back(p.flatten());
  const Subspace span = Subspace::span(CPAProduct::flat_size(2), flats);
  EXPECT_TRUE(span.contains(borel_sl2_product(1, 0).flatten()));
  EXPECT_TRUE(span.contains(borel_sl2_product(0, 1).flatten()));
}

TEST(LinearPart, BasisSatisfiesLinearAxioms) {
  for (const auto& key : catalog_examples()) {
    const auto lie = make(key);
    for (const auto& p : solve_linear_part(lie)) {
      const auto r = verify_cpa(lie, p);
      EXPECT_TRUE(r.commutativity_ok && r.derivation_ok) << lie.name();
    }
  }
}

TEST(LinearPart, HeisenbergContainsFamily) {
  const auto basis = solve_linear_part(heisenberg());
  std::vector<Vector> flats;
  for (const auto& p : basis) flats.push_back(p.flatten());
  const Subspace span = Subspace::span(CPAProduct::flat_size(3), flats);
  CPAProduct a(3), b(3);
  a.set(0, 0, vec({0, 1, 0}));
  b.set(0, 1, vec({0, 0, 1}));
  EXPECT_TRUE(span.contains(a.flatten()));
  EXPECT_TRUE(span.contains(b.flatten()));
}

TEST(Residuals, AgreeWithVerifyOnSamplePoints) {
  for (const char* key : {"borel_sl(2)", "heisenberg", "abelian(2)", "borel_sl(3)"}) {
    const auto lie = make(parse_catalog_key(key));
    const auto basis = solve_linear_part(lie);
    const auto res = quadratic_residuals(lie, basis);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dist(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
      Vector t(basis.size());
      // Mostly sparse points so that some of them are solutions.
      for (auto& x : t) x = rng() % 3 == 0 ? dist(rng) : 0;
      bool vanish = true;
      for (const auto& r : res) vanish = vanish && is_zero(r.evaluate(t));
      EXPECT_EQ(vanish, verify_cpa(lie, combine(basis, t)).ok()) << key;
    }
  }
  EXPECT_TRUE(quadratic_residuals(abelian(1), solve_linear_part(abelian(1))).empty());
}

TEST(Classify, CatalogExamples) {
  EXPECT_EQ(classify(sl(2), Method::Inner).kind, ClassificationKind::Trivial);
  const auto b = classify(borel_sl(2), Method::Inner);
  EXPECT_EQ(b.kind, ClassificationKind::ComponentUnion);
  EXPECT_EQ(b.components.size(), 2u);
  const auto a = classify(abelian(1), Method::General);
  EXPECT_EQ(a.kind, ClassificationKind::FullLinearSpace);
  EXPECT_EQ(a.parameter_count(), 1u);
  const auto b3 = classify(borel_sl(3), Method::Inner);
  EXPECT_EQ(b3.variety_dim(), std::optional<std::size_t>(1));
  EXPECT_EQ(code_of([] { classify(heisenberg(), Method::Inner); }), ErrorCode::NotComplete);
}

TEST(Classify, AbelianTwoIsCommutativeAssociative) {
  // Commutative associative 2-dimensional algebras form a non-linear variety,
  // so the resolver must not claim a union of linear components.
  const auto c = classify(abelian(2), Method::General);
  EXPECT_EQ(c.parameter_count(), 6u);
  if (c.kind == ClassificationKind::ComponentUnion) {
    for (const auto& comp : c.components) EXPECT_TRUE(component_sound(abelian(2), c, comp));
  }
  for (const auto& p : std::vector<CPAProduct>{CPAProduct(2), center_construction_product(abelian(2))})
    EXPECT_EQ(is_associative(p), verify_cpa(abelian(2), p).ok());
}

TEST(Classify, ComponentsAreSound) {
  for (const char* key : {"borel_sl(2)", "borel_sl(3)", "abelian(1)"}) {
    const auto lie = make(parse_catalog_key(key));
    for (Method m : {Method::General, Method::Inner}) {
      if (m == Method::Inner && !is_complete(lie)) continue;
      const auto c = classify(lie, m);
      for (const auto& comp : c.components) EXPECT_TRUE(component_sound(lie, c, comp)) << key;
    }
  }
}

TEST(InnerSolve, BorelPhiFamily) {
  const auto r = inner_solve(borel_sl(2));
  EXPECT_EQ(r.phi_basis.size(), 3u);
  const auto& c = r.classification;
  for (const auto& comp : c.components) {
    for (const Vector& t : {comp.point(), add(comp.point(), comp.directions().vector(0))}) {
      const CPAProduct p = c.product_at(t);
      EXPECT_EQ(c.phi_at(t), borel_sl2_phi(p.d(0, 1, 0), p.d(1, 1, 0)));
      EXPECT_EQ(product_from_phi(borel_sl(2), c.phi_at(t)), p);
    }
  }
  EXPECT_TRUE(inner_solve(sl(2)).phi_basis.empty());
  EXPECT_EQ(code_of([] { inner_solve(heisenberg()); }), ErrorCode::NotComplete);
}

TEST(DetectInner, Examples) {
  EXPECT_FALSE(detect_inner(heisenberg(), heisenberg_a_mu(1)).has_value());
  const auto w = detect_inner(borel_sl(2), borel_sl2_product(2, 0));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->inner);
  EXPECT_FALSE(w->nil_inner);
  EXPECT_EQ(w->phi * w->phi, Matrix::identity(2));
  const auto w0 = detect_inner(borel_sl(2), borel_sl2_product(0, 2));
  ASSERT_TRUE(w0.has_value());
  EXPECT_TRUE(w0->nil_inner);
  EXPECT_TRUE((w0->phi * w0->phi).is_zero());
  const auto z = detect_inner(heisenberg(), CPAProduct(3));
  ASSERT_TRUE(z.has_value());
  EXPECT_TRUE(z->nil_inner);
  EXPECT_EQ(code_of([] { detect_inner(borel_sl(2), borel_sl2_product(1, 0)); }), ErrorCode::NotACPA);
}

TEST(Decompose, Examples) {
  const auto b = borel_sl(2);
  const auto d2 = phi_decompose(b, borel_sl2_phi(2, 0));
  EXPECT_TRUE(d2.n_part.is_zero());
  EXPECT_TRUE(d2.h_part.is_full());
  EXPECT_EQ(d2.eigenvalues, (std::vector<Rational>{-1, 1}));
  EXPECT_TRUE(d2.checks.all());
  const auto d0 = phi_decompose(b, borel_sl2_phi(0, 2));
  EXPECT_TRUE(d0.n_part.is_full());
  EXPECT_TRUE(d0.checks.all());
  const auto dz = phi_decompose(sl(3), Matrix(8, 8));
  EXPECT_TRUE(dz.n_part.is_full());
  EXPECT_TRUE(dz.h_part.is_zero());
  EXPECT_EQ(code_of([&] { phi_decompose(abelian(2), Matrix{{0, -1}, {1, 0}}); }), ErrorCode::UnsupportedSpectrum);
  EXPECT_EQ(code_of([&] { phi_decompose(b, Matrix{{1, 0}, {0, 0}}); }), ErrorCode::NotACPA);
  EXPECT_EQ(code_of([&] { phi_decompose(b, borel_sl2_phi(1, 0)); }), ErrorCode::NotACPA);
}
