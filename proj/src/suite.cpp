#include "cpa/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cpa/catalog.hpp"
#include "cpa/constructions.hpp"
#include "cpa/error.hpp"
#include "cpa/lie_structure.hpp"

namespace cpa {

std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Unsupported: return "unsupported";
  }
  return "?";
}

CPAProduct heisenberg_a_mu(const Rational& mu) {
  CPAProduct p(3);
  p.set(0, 0, {0, 1, 0});
  p.set(0, 1, {0, 0, mu});
  return p;
}

CPAProduct borel_sl2_product(const Rational& alpha, const Rational& beta) {
  CPAProduct p(2);
  p.set(0, 1, {alpha, 0});
  p.set(1, 1, {beta, 0});
  return p;
}

Matrix borel_sl2_phi(const Rational& alpha, const Rational& beta) {
  const Rational half(1, 2);
  return Matrix{{-half * alpha, -half * beta}, {0, half * alpha}};
}

Json product_table(const LieAlgebra& lie, const CPAProduct& p) {
  Json out = Json::object();
  const auto& labels = lie.labels();
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = i; j < p.dim(); ++j) {
      const Vector v = p.basis_product(i, j);
      if (is_zero(v)) continue;
      std::string text;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (is_zero(v[k])) continue;
        if (!text.empty()) text += " + ";
        text += (v[k] == 1 ? "" : to_string(v[k]) + "*") + labels[k];
      }
      out[labels[i] + "*" + labels[j]] = text;
    }
  return out;
}

namespace {

class Case {
 public:
  explicit Case(std::string id) { result_.id = std::move(id); result_.details = Json::object(); }

  bool check(const std::string& name, bool ok) {
    result_.details["checks"][name] = ok;
    all_ok_ = all_ok_ && ok;
    return ok;
  }
  Json& details() { return result_.details; }
  void set_summary(const std::string& text) { result_.details["summary"] = text; }

  SuiteCase finish() {
    result_.status = all_ok_ ? CaseStatus::Pass : CaseStatus::Fail;
    return std::move(result_);
  }

 private:
  SuiteCase result_;
  bool all_ok_ = true;
};

Subspace span_of(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> v;
  for (auto i : idx) v.push_back(unit_vector(n, i));
  return Subspace::span(n, v);
}

// Products reachable from a classification: each component's point and
// point + direction.
std::vector<CPAProduct> sample_products(const Classification& c) {
  std::vector<CPAProduct> out;
  if (c.linear_basis.empty()) return out;
  for (const auto& comp : c.components) {
    out.push_back(c.product_at(comp.point()));
    for (const auto& d : comp.directions().vectors()) out.push_back(c.product_at(add(comp.point(), d)));
  }
  return out;
}

bool json_round_trip(const LieAlgebra& lie, const CPAProduct& p) {
  const Json a = algebra_to_json(lie);
  const Json b = product_to_json(p);
  return algebra_from_json(Json::parse(a.dump())) == lie && product_from_json(Json::parse(b.dump())) == p;
}

struct InnerInstance {
  std::string name;
  LieAlgebra lie;
  CPAProduct product;
};

std::vector<InnerInstance> inner_instances() {
  std::vector<InnerInstance> out;
  const auto b2 = borel_sl(2);
  out.push_back({"borel_sl(2) alpha=2 beta=0", b2, borel_sl2_product(2, 0)});
  out.push_back({"borel_sl(2) alpha=0 beta=2", b2, borel_sl2_product(0, 2)});
  out.push_back({"borel_sl(2) alpha=2 beta=3", b2, borel_sl2_product(2, 3)});
  out.push_back({"borel_sl(2) eigenfunctional v=e1", b2, lie_eigenfunctional_product(b2, unit_vector(2, 0)).product});
  for (int k = 2; k <= 3; ++k) {
    auto bc = borel_center_element(k);
    out.push_back({bc.algebra.name() + " central z", bc.algebra,
                   central_z_product(bc.algebra, derived_algebra(bc.algebra), bc.z)});
  }
  out.push_back({"sl(2) zero", sl(2), CPAProduct(3)});
  return out;
}

// ---------------------------------------------------------------------------

SuiteCase chain_heisenberg() {
  Case c("chain_heisenberg");
  c.set_summary("ideal chain of the product e1.e1 = e2, e1.e2 = e3 on the Heisenberg algebra");
  const auto h = heisenberg();
  const auto p = heisenberg_a_mu(1);
  c.check("product_is_cpa", verify_cpa(h, p).ok());
  const auto chain = ideal_chain(h, p);
  const std::vector<Subspace> expected{Subspace::zero(3), span_of(3, {2}), span_of(3, {1, 2}), Subspace::full(3)};
  c.details()["chain"] = chain_to_json(chain);
  c.check("chain_matches", chain.chain == expected);
  c.check("i_infinity_is_whole_algebra", chain.i_infinity.is_full());
  c.check("k_stable_is_3", chain.k_stable == 3);
  const Subspace ann = annihilator(p);
  c.check("annihilator_inside_i_infinity", chain.i_infinity.contains(ann));
  c.check("power_at_index_annihilates",
          chain.nilpotency_index > 0 && annihilates(p, bracket_power(h, chain.i_infinity, chain.nilpotency_index)));
  c.check("third_power_annihilates", annihilates(p, bracket_power(h, chain.i_infinity, 3)));
  c.check("quotient_nondegenerate", chain.nondegenerate);
  c.check("quotient_is_zero_algebra", quotient_cpa(h, p, chain.i_infinity).algebra.dim() == 0);
  return c.finish();
}

SuiteCase quotient_heisenberg() {
  Case c("quotient_heisenberg");
  c.set_summary("quotient of the Heisenberg product e1.e1 = e2, e1.e2 = e3 by span{e3}");
  const auto h = heisenberg();
  const auto p = heisenberg_a_mu(1);
  const auto q = quotient_cpa(h, p, span_of(3, {2}));
  c.details()["table"] = product_table(q.algebra, q.product);
  CPAProduct expected(2);
  expected.set(0, 0, {0, 1});
  c.check("quotient_abelian", structure_report(q.algebra).abelian);
  c.check("quotient_product", q.product == expected);
  c.check("quotient_is_cpa", verify_cpa(q.algebra, q.product).ok());
  bool rejected = false;
  try {
    quotient_cpa(h, p, span_of(3, {0, 2}));  // a Lie ideal, but e1.e1 = e2 leaves it
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::NotATwoSidedIdeal;
  }
  c.check("non_ideal_rejected", rejected);
  return c.finish();
}

SuiteCase borel_sl2_classification() {
  Case c("borel_sl2_classification");
  c.set_summary("all CPA products on borel_sl(2): e1.e2 = a e1, e2.e2 = b e1 with a(a - 2) = 0");
  const auto b = borel_sl(2);
  const auto inner = classify(b, Method::Inner);
  const auto general = classify(b, Method::General);
  c.details()["inner"] = classification_to_json(inner);
  c.check("inner_component_union", inner.kind == ClassificationKind::ComponentUnion);
  c.check("two_components", inner.components.size() == 2);

  // Read every component in (α, β) coordinates.
  auto to_alpha_beta = [&](const Classification& cl, std::set<std::string>& alphas, bool& shape_ok) {
    for (const auto& comp : cl.components) {
      const CPAProduct at = cl.product_at(comp.point());
      if (at != borel_sl2_product(at.d(0, 1, 0), at.d(1, 1, 0))) shape_ok = false;
      bool beta_free = false;
      for (const auto& dir : comp.directions().vectors()) {
        const CPAProduct step = cl.product_at(add(comp.point(), dir)) - at;
        if (!is_zero(step.d(0, 1, 0))) shape_ok = false;  // α fixed on a component
        if (step != borel_sl2_product(0, step.d(1, 1, 0))) shape_ok = false;
        if (!is_zero(step.d(1, 1, 0))) beta_free = true;
      }
      if (!beta_free || comp.dim() != 1) shape_ok = false;
      alphas.insert(to_string(at.d(0, 1, 0)));
    }
  };
  std::set<std::string> inner_alphas, general_alphas;
  bool inner_shape = true, general_shape = true;
  to_alpha_beta(inner, inner_alphas, inner_shape);
  to_alpha_beta(general, general_alphas, general_shape);
  c.details()["alpha_values"] = inner_alphas;
  c.check("components_alpha_fixed_beta_free", inner_shape);
  c.check("alpha_values_0_and_2", inner_alphas == std::set<std::string>{"0", "2"});
  c.check("general_method_agrees", general_shape && general_alphas == inner_alphas &&
                                        general.kind == inner.kind && general.variety_dim() == inner.variety_dim());

  // Residual ideal of the (α, β) family.
  std::vector<MPoly> res;
  std::set<std::string> seen;
  for (const auto& r : family_axiom_residuals(b, {borel_sl2_product(1, 0), borel_sl2_product(0, 1)}))
    if (seen.insert(r.normalized().to_string({"alpha", "beta"})).second) res.push_back(r.normalized());
  Json texts = Json::array();
  for (const auto& r : res) texts.push_back(r.to_string({"alpha", "beta"}));
  c.details()["alpha_beta_residuals"] = texts;
  c.check("residual_is_alpha_squared_minus_2_alpha",
          seen == std::set<std::string>{"alpha^2 - 2*alpha"});

  bool phi_ok = true, sound = true;
  for (const auto& comp : inner.components) {
    std::vector<Vector> pts{comp.point()};
    for (const auto& d : comp.directions().vectors()) pts.push_back(add(comp.point(), d));
    for (const auto& t : pts) {
      const CPAProduct p = inner.product_at(t);
      phi_ok = phi_ok && inner.phi_at(t) == borel_sl2_phi(p.d(0, 1, 0), p.d(1, 1, 0));
    }
    sound = sound && component_sound(b, inner, comp);
  }
  c.check("phi_matches_half_matrix", phi_ok);
  c.check("components_sound", sound);
  return c.finish();
}

SuiteCase decompose_case(const std::string& id, const Rational& alpha, const Rational& beta, bool expect_n_zero) {
  Case c(id);
  c.set_summary("eigenspace decomposition of phi for the borel_sl(2) product with alpha = " + to_string(alpha) +
                ", beta = " + to_string(beta));
  const auto b = borel_sl(2);
  const Matrix phi = borel_sl2_phi(alpha, beta);
  const auto w = detect_inner(b, borel_sl2_product(alpha, beta));
  c.check("weakly_inner", w.has_value());
  if (w) {
    c.details()["witness"] = witness_to_json(*w);
    c.check("phi_recovered", w->phi == phi);
    c.check("inner", w->inner);
    c.check("nil_inner_iff_alpha_zero", w->nil_inner == (alpha == 0));
  }
  const auto d = phi_decompose(b, phi);
  c.details()["decomposition"] = decomposition_to_json(d);
  c.check("all_structural_checks", d.checks.all());
  const Matrix phi2 = phi * phi;
  if (expect_n_zero) {
    c.check("n_part_zero", d.n_part.is_zero());
    c.check("h_part_whole", d.h_part.is_full());
    c.check("eigenvalues_minus1_1", d.eigenvalues == std::vector<Rational>{-1, 1});
    c.check("phi_squared_identity", phi2 == Matrix::identity(2));
    c.check("algebra_metabelian", structure_report(b).metabelian);
  } else {
    c.check("n_part_whole", d.n_part.is_full());
    c.check("h_part_zero", d.h_part.is_zero());
    c.check("phi_squared_zero", phi2.is_zero());
  }
  return c.finish();
}

SuiteCase heisenberg_not_weakly_inner() {
  Case c("heisenberg_not_weakly_inner");
  c.set_summary("the products e1.e1 = e2, e1.e2 = mu e3 on the Heisenberg algebra are not weakly inner");
  const auto h = heisenberg();
  for (long mu : {0L, 1L, -2L}) {
    const auto p = heisenberg_a_mu(mu);
    c.check("mu_" + std::to_string(mu) + "_is_cpa", verify_cpa(h, p).ok());
    c.check("mu_" + std::to_string(mu) + "_not_weakly_inner", !detect_inner(h, p).has_value());
  }
  bool rejected = false;
  try {
    classify(h, Method::Inner);
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::NotComplete;
  }
  c.check("inner_method_rejects_noncomplete", rejected);
  return c.finish();
}

SuiteCase semisimple_trivial() {
  Case c("semisimple_trivial");
  c.set_summary("sl(2) and sl(3) carry only the zero product");
  for (int n : {2, 3}) {
    const auto s = sl(n);
    const auto cl = classify(s, Method::Inner);
    c.details()[s.name()] = classification_to_json(cl);
    c.check(s.name() + "_trivial", cl.kind == ClassificationKind::Trivial);
  }
  const auto g2 = classify(sl(2), Method::General);
  c.check("sl(2)_general_trivial", g2.kind == ClassificationKind::Trivial);
  c.details()["sl(2)_linear_part_dim"] = solve_linear_part(sl(2)).size();
  return c.finish();
}

SuiteCase perfect_semidirect_trivial() {
  Case c("perfect_semidirect_trivial");
  c.set_summary("the perfect algebra sl(2) semidirect V(2) carries only the zero product");
  const auto g = sl2_semidirect_V(2);
  const auto r = structure_report(g);
  c.check("perfect", r.perfect);
  c.check("not_semisimple", !r.radical.is_zero());
  c.check("not_complete", !is_complete(g));
  const auto cl = classify(g, Method::General);
  c.details()["classification"] = classification_to_json(cl);
  c.check("general_trivial", cl.kind == ClassificationKind::Trivial);
  return c.finish();
}

SuiteCase example_3_6_trivial() {
  Case c("example_3_6_trivial");
  c.set_summary("the 6-dimensional parabolic subalgebra of sl(3) carries only the zero product");
  const auto g = example_3_6();
  const Subspace d = derived_algebra(g);
  c.check("derived_dim_5", d.dim() == 5);
  c.check("center_of_derived_zero", center_of(g, d).is_zero());
  c.check("cocycle_space_zero", cocycle_space(g, d).empty());
  const auto cl = classify(g, Method::Inner);
  const auto gen = classify(g, Method::General);
  c.details()["classification"] = classification_to_json(cl);
  c.check("inner_trivial", cl.kind == ClassificationKind::Trivial);
  c.check("general_trivial", gen.kind == ClassificationKind::Trivial);
  const Subspace p = span_of(6, {0, 1, 2, 3, 4});
  c.check("p_perfect", bracket_span(g, p, p) == p);
  c.check("p_annihilates_zero_product", annihilates(CPAProduct(6), p));
  const auto para = classify(parabolic_sl(3, {1}), Method::Inner);
  c.check("parabolic_key_trivial", para.kind == ClassificationKind::Trivial);
  return c.finish();
}

SuiteCase eigenfunctional_borel_sl2() {
  Case c("eigenfunctional_borel_sl2");
  c.set_summary("x.y = [x, [y, v]] for the common eigenvector v = e1 of borel_sl(2)");
  const auto b = borel_sl(2);
  const auto ef = lie_eigenfunctional_product(b, unit_vector(2, 0));
  c.details()["lambda"] = vector_to_json(ef.lambda);
  c.details()["table"] = product_table(b, ef.product);
  CPAProduct expected(2);
  expected.set(1, 1, {4, 0});
  c.check("lambda_0_2", ef.lambda == Vector{0, 2});
  c.check("product_e2e2_4e1", ef.product == expected);
  c.check("is_cpa", verify_cpa(b, ef.product).ok());
  c.check("nontrivial", !ef.product.is_zero());
  const auto w = detect_inner(b, ef.product);
  c.check("nil_inner", w && w->nil_inner);
  const auto v = find_common_eigenvector(b);
  c.check("common_eigenvector_found", v.has_value());
  if (v) c.check("found_vector_gives_cpa", verify_cpa(b, lie_eigenfunctional_product(b, *v).product).ok());
  bool rejected = false;
  try {
    lie_eigenfunctional_product(b, unit_vector(2, 1));
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::NotCommonEigenvector;
  }
  c.check("e2_rejected", rejected);
  return c.finish();
}

SuiteCase center_case(const std::string& id, const LieAlgebra& lie, const CPAProduct& expected, bool expect_case1) {
  Case c(id);
  c.set_summary("central product x.y = l(x) l(y) z on " + lie.name());
  const auto cc = center_construction(lie);
  c.details()["table"] = product_table(lie, cc.product);
  c.details()["z"] = vector_to_json(cc.z);
  c.check("z_in_derived_matches_case", cc.z_in_derived == expect_case1);
  c.check("expected_product", cc.product == expected);
  c.check("nontrivial", !cc.product.is_zero());
  c.check("is_cpa", verify_cpa(lie, cc.product).ok());
  c.check("associative", is_associative(cc.product));
  return c.finish();
}

SuiteCase cocycle_borel_sl3() {
  Case c("cocycle_borel_sl3");
  c.set_summary("cocycle products on borel_sl(3) with I = [b, b]");
  const auto b = borel_sl(3);
  const Subspace i = derived_algebra(b);
  const auto cocycles = cocycle_space(b, i);
  c.check("cocycle_space_dim_1", cocycles.size() == 1);
  if (cocycles.size() == 1) {
    const auto p = cocycle_product(b, i, cocycles[0]);
    c.details()["table"] = product_table(b, p);
    c.check("is_cpa", verify_cpa(b, p).ok());
    c.check("associative", is_associative(p));
    const auto w = detect_inner(b, p);
    c.check("nil_inner", w && w->nil_inner);
    const auto zp = central_z_product(b, i, unit_vector(5, 1));
    bool proportional = false;
    for (std::size_t k = 0; k < CPAProduct::flat_size(5); ++k) {
      const Rational a = p.flatten()[k], z = zp.flatten()[k];
      if (!is_zero(z)) {
        proportional = p == (a / z) * zp;
        break;
      }
    }
    c.check("matches_central_z_product", proportional);
  }
  c.check("zero_z_gives_zero", central_z_product(b, i, Vector(5)).is_zero());
  bool rejected = false;
  try {
    central_z_product(b, i, unit_vector(5, 0));
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::NotCentralInI;
  }
  c.check("noncentral_z_rejected", rejected);
  return c.finish();
}

SuiteCase fix_witness_ideals() {
  Case c("fix_witness_ideals");
  c.set_summary("witness ideal for fix(g) against its known values");
  auto record = [&](const LieAlgebra& lie, const Subspace& expected) {
    const auto f = fix_witness_ideal(lie);
    c.details()["dims"][lie.name()] = f.ideal.dim();
    c.check(lie.name(), f.ideal == expected && derived_algebra(lie).contains(f.ideal));
  };
  record(sl(2), Subspace::full(3));
  record(sl(3), Subspace::full(8));
  record(heisenberg(), Subspace::zero(3));
  for (int n = 2; n <= 4; ++n) record(borel_sl(n), derived_algebra(borel_sl(n)));
  record(example_3_6(), derived_algebra(example_3_6()));
  // The Levi part span{e1, e3, e5} lies in fix.
  c.check("levi_inside_fix", fix_witness_ideal(example_3_6()).ideal.contains(span_of(6, {0, 2, 4})));
  return c.finish();
}

SuiteCase borel_family_classification() {
  Case c("borel_family_classification");
  c.set_summary("products on borel_sl(n), n = 3, 4, are exactly x.y = [[z, x], y] with z in Z([b, b])");
  for (int k = 2; k <= 3; ++k) {
    const auto bc = borel_center_element(k);
    const auto& b = bc.algebra;
    const std::string tag = b.name();
    const Subspace i = derived_algebra(b);
    const Subspace z = center_of(b, i);
    c.check(tag + "_center_of_derived_dim_1", z.dim() == 1 && z.contains(bc.z));
    c.check(tag + "_not_metabelian", !structure_report(b).metabelian);
    const auto cl = classify(b, Method::Inner);
    c.details()[tag] = classification_to_json(cl);
    c.check(tag + "_variety_dim_1", cl.variety_dim() == std::optional<std::size_t>(1));
    const CPAProduct zp = central_z_product(b, i, bc.z);
    bool all_central = !cl.components.empty();
    for (const auto& comp : cl.components) {
      const CPAProduct at = cl.product_at(comp.point());
      // each sample product is s * zp = central_z_product(s z)
      std::vector<CPAProduct> samples{at};
      for (const auto& d : comp.directions().vectors()) samples.push_back(cl.product_at(add(comp.point(), d)));
      for (const auto& s : samples) {
        bool hit = s.is_zero();
        for (std::size_t k2 = 0; k2 < CPAProduct::flat_size(b.dim()) && !hit; ++k2) {
          const Rational zk = zp.flatten()[k2];
          if (is_zero(zk)) continue;
          const Rational scale = s.flatten()[k2] / zk;
          hit = s == central_z_product(b, i, scaled(scale, bc.z));
          break;
        }
        all_central = all_central && hit;
      }
      all_central = all_central && component_sound(b, cl, comp);
    }
    c.check(tag + "_every_solution_central_z", all_central);
    c.check(tag + "_cocycle_dim_1", cocycle_space(b, i).size() == 1);
  }
  return c.finish();
}

SuiteCase borel_center_products() {
  Case c("borel_center_products");
  c.set_summary("on borel_sl(k+1): [h1, z] = [hk, z] = z, other [hi, z] = 0, and h1.h1 = hk.hk = h1.hk = z");
  for (int k = 2; k <= 3; ++k) {
    const auto bc = borel_center_element(k);
    const auto& b = bc.algebra;
    const std::string tag = b.name();
    const std::size_t n = b.dim();
    bool brackets = true;
    for (std::size_t a = 0; a < bc.h_indices.size(); ++a) {
      const Vector hz = bracket(b, unit_vector(n, bc.h_indices[a]), bc.z);
      const bool edge = a == 0 || a + 1 == bc.h_indices.size();
      brackets = brackets && hz == (edge ? bc.z : Vector(n));
    }
    c.check(tag + "_h_brackets", brackets);
    CPAProduct expected(n);
    const std::size_t h1 = bc.h_indices.front(), hk = bc.h_indices.back();
    expected.set(h1, h1, bc.z);
    expected.set(hk, hk, bc.z);
    expected.set(h1, hk, bc.z);
    const CPAProduct zp = central_z_product(b, derived_algebra(b), bc.z);
    c.details()[tag] = product_table(b, zp);
    c.check(tag + "_table_matches", zp == expected);
    c.check(tag + "_is_cpa", verify_cpa(b, zp).ok());
  }
  return c.finish();
}

SuiteCase borel_metabelian_only_rank_one() {
  Case c("borel_metabelian_only_rank_one");
  c.set_summary("borel_sl(n) is metabelian only for n = 2");
  for (int n = 2; n <= 4; ++n) {
    const auto b = borel_sl(n);
    c.check(b.name(), structure_report(b).metabelian == (n == 2));
  }
  return c.finish();
}

SuiteCase componentwise_products() {
  Case c("componentwise_products");
  c.set_summary("factorwise products on direct sums");
  auto run = [&](const std::string& tag, const LieAlgebra& l1, const CPAProduct& p1, const LieAlgebra& l2,
                 const CPAProduct& p2) {
    const auto [sum, p] = componentwise_product(l1, p1, l2, p2);
    const std::size_t n1 = l1.dim(), n = sum.dim();
    std::vector<Vector> a, b;
    for (std::size_t i = 0; i < n; ++i) (i < n1 ? a : b).push_back(unit_vector(n, i));
    const Subspace q1 = Subspace::span(n, a), q2 = Subspace::span(n, b);
    bool contained = true;
    for (const auto& x : q1.vectors())
      for (const auto& y : q2.vectors()) contained = contained && is_zero(p(x, y));
    for (const auto& [q, vs] : {std::pair{q1, a}, std::pair{q2, b}})
      for (const auto& x : vs)
        for (const auto& y : vs) contained = contained && q.contains(p(x, y));
    c.check(tag + "_is_cpa", verify_cpa(sum, p).ok());
    c.check(tag + "_factor_containment", contained);
    return p;
  };
  const auto b2 = borel_sl(2);
  run("borel2_borel2", b2, borel_sl2_product(2, 0), b2, borel_sl2_product(2, 0));
  run("borel2_heisenberg", b2, borel_sl2_product(2, 0), heisenberg(), heisenberg_a_mu(1));
  const auto zero = run("zero_zero", b2, CPAProduct(2), sl(2), CPAProduct(3));
  c.check("zero_zero_is_zero", zero.is_zero());
  return c.finish();
}

SuiteCase inner_structures_product_ideals() {
  Case c("inner_structures_product_ideals");
  c.set_summary("for inner products, Lie ideals are product ideals and the chain is phi-invariant");
  for (const auto& inst : inner_instances()) {
    const auto w = detect_inner(inst.lie, inst.product);
    if (!c.check(inst.name + "_inner", w && w->inner)) continue;
    bool ideals = true;
    for (const auto& s : standard_ideals(inst.lie)) ideals = ideals && is_product_ideal(inst.product, s);
    c.check(inst.name + "_lie_ideals_are_product_ideals", ideals);
    bool invariant = true;
    for (const auto& s : ideal_chain(inst.lie, inst.product).chain)
      invariant = invariant && s.contains(image(w->phi, s));
    c.check(inst.name + "_chain_phi_invariant", invariant);
  }
  return c.finish();
}

SuiteCase nondegenerate_inner_metabelian() {
  Case c("nondegenerate_inner_metabelian");
  c.set_summary("algebras with a nondegenerate inner product are metabelian");
  std::size_t found = 0;
  for (const auto& inst : inner_instances()) {
    if (!is_nondegenerate(inst.product)) continue;
    ++found;
    c.check(inst.name, structure_report(inst.lie).metabelian);
  }
  c.details()["nondegenerate_instances"] = found;
  c.check("at_least_one_instance", found > 0);
  return c.finish();
}

SuiteCase round_trip_soundness() {
  Case c("round_trip_soundness");
  c.set_summary("every product built or classified re-verifies and survives JSON emit/read");
  std::vector<std::pair<LieAlgebra, CPAProduct>> all;
  auto add_classified = [&](const LieAlgebra& lie, Method m) {
    for (auto& p : sample_products(classify(lie, m))) all.emplace_back(lie, std::move(p));
  };
  add_classified(borel_sl(2), Method::Inner);
  add_classified(borel_sl(2), Method::General);
  add_classified(borel_sl(3), Method::Inner);
  add_classified(borel_sl(4), Method::Inner);
  add_classified(abelian(1), Method::General);
  for (const auto& inst : inner_instances()) all.emplace_back(inst.lie, inst.product);
  for (long mu : {0L, 1L, -2L}) all.emplace_back(heisenberg(), heisenberg_a_mu(mu));
  all.emplace_back(heisenberg(), center_construction_product(heisenberg()));
  all.emplace_back(abelian(2), center_construction_product(abelian(2)));
  const auto b3 = borel_sl(3);
  for (const auto& f : cocycle_space(b3, derived_algebra(b3)))
    all.emplace_back(b3, cocycle_product(b3, derived_algebra(b3), f));
  const auto q = quotient_cpa(heisenberg(), heisenberg_a_mu(1), span_of(3, {2}));
  all.emplace_back(q.algebra, q.product);
  all.push_back(componentwise_product(borel_sl(2), borel_sl2_product(2, 0), heisenberg(), heisenberg_a_mu(1)));
  bool verified = true, json_ok = true;
  for (const auto& [lie, p] : all) {
    verified = verified && verify_cpa(lie, p).ok();
    json_ok = json_ok && json_round_trip(lie, p);
  }
  c.details()["products_checked"] = all.size();
  c.check("all_verify", verified);
  c.check("all_json_round_trip", json_ok);
  return c.finish();
}

SuiteCase solver_consistency() {
  Case c("solver_consistency");
  c.set_summary("general and inner pipelines agree on complete catalog algebras of dimension at most 4");
  std::size_t compared = 0;
  for (const auto& key : catalog_examples()) {
    const auto lie = make(key);
    if (lie.dim() > 4 || !is_complete(lie)) continue;
    ++compared;
    const auto g = classify(lie, Method::General);
    const auto i = classify(lie, Method::Inner);
    c.details()[lie.name()] = {{"general", to_string(g.kind)}, {"inner", to_string(i.kind)}};
    c.check(lie.name(), g.kind == i.kind && g.variety_dim() == i.variety_dim());
  }
  c.details()["compared"] = compared;
  c.check("compared_some", compared > 0);
  return c.finish();
}

using Runner = std::function<SuiteCase()>;

const std::map<std::string, Runner>& registry() {
  static const std::map<std::string, Runner> cases = [] {
    std::map<std::string, Runner> m;
    m["borel_center_products"] = borel_center_products;
    m["borel_family_classification"] = borel_family_classification;
    m["borel_metabelian_only_rank_one"] = borel_metabelian_only_rank_one;
    m["borel_sl2_classification"] = borel_sl2_classification;
    m["borel_sl2_decompose_alpha0"] = [] { return decompose_case("borel_sl2_decompose_alpha0", 0, 2, false); };
    m["borel_sl2_decompose_alpha2"] = [] { return decompose_case("borel_sl2_decompose_alpha2", 2, 0, true); };
    m["center_construction_abelian2"] = [] {
      CPAProduct e(2);
      e.set(0, 0, {1, 0});
      return center_case("center_construction_abelian2", abelian(2), e, false);
    };
    m["center_construction_heisenberg"] = [] {
      CPAProduct e(3);
      e.set(0, 0, {0, 0, 1});
      return center_case("center_construction_heisenberg", heisenberg(), e, true);
    };
    m["chain_heisenberg"] = chain_heisenberg;
    m["cocycle_borel_sl3"] = cocycle_borel_sl3;
    m["componentwise_products"] = componentwise_products;
    m["eigenfunctional_borel_sl2"] = eigenfunctional_borel_sl2;
    m["example_3_6_trivial"] = example_3_6_trivial;
    m["fix_witness_ideals"] = fix_witness_ideals;
    m["heisenberg_not_weakly_inner"] = heisenberg_not_weakly_inner;
    m["inner_structures_product_ideals"] = inner_structures_product_ideals;
    m["nondegenerate_inner_metabelian"] = nondegenerate_inner_metabelian;
    m["perfect_semidirect_trivial"] = perfect_semidirect_trivial;
    m["quotient_heisenberg"] = quotient_heisenberg;
    m["round_trip_soundness"] = round_trip_soundness;
    m["semisimple_trivial"] = semisimple_trivial;
    m["solver_consistency"] = solver_consistency;
    return m;
  }();
  return cases;
}

}  // namespace

std::vector<std::string> suite_case_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, run] : registry()) ids.push_back(id);
  return ids;
}

SuiteCase run_case(const std::string& id) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw Error(ErrorCode::BadParameters, "unknown suite case '" + id + "'");
  try {
    return it->second();
  } catch (const Error& e) {
    SuiteCase out{id, e.code() == ErrorCode::UnsupportedSpectrum ? CaseStatus::Unsupported : CaseStatus::Fail,
                  Json::object()};
    out.details["error"] = e.what();
    return out;
  }
}

std::vector<SuiteCase> run_suite() {
  std::vector<SuiteCase> out;
  for (const auto& id : suite_case_ids()) out.push_back(run_case(id));
  return out;
}

Json suite_to_json(const std::vector<SuiteCase>& cases) {
  Json list = Json::array();
  std::size_t pass = 0, fail = 0, unsupported = 0;
  for (const auto& c : cases) {
    list.push_back(Json{{"id", c.id}, {"status", to_string(c.status)}, {"details", c.details}});
    (c.status == CaseStatus::Pass ? pass : c.status == CaseStatus::Fail ? fail : unsupported)++;
  }
  return Json{{"cases", list}, {"summary", {{"pass", pass}, {"fail", fail}, {"unsupported", unsupported}}}};
}

}  // namespace cpa
