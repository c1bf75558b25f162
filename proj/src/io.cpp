#include "cpa/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>

#include "cpa/catalog.hpp"
#include "cpa/error.hpp"

namespace cpa {

namespace {

[[noreturn]] void format_error(const std::string& what) { throw Error(ErrorCode::Format, what); }

std::size_t index_from_json(const Json& j, std::size_t dim, const char* what) {
  if (!j.is_number_integer()) format_error(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= dim) format_error(std::string(what) + " out of range");
  return static_cast<std::size_t>(v);
}

std::size_t key_index(const std::string& key, std::size_t dim) {
  std::size_t used = 0;
  long long v = -1;
  try {
    v = std::stoll(key, &used);
  } catch (const std::exception&) {
    format_error("coefficient key '" + key + "' is not an index");
  }
  if (used != key.size() || v < 0 || static_cast<std::size_t>(v) >= dim)
    format_error("coefficient key '" + key + "' out of range");
  return static_cast<std::size_t>(v);
}

Json coeffs_to_json(const Vector& v) {
  Json out = Json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!is_zero(v[k])) out[std::to_string(k)] = rational_to_json(v[k]);
  return out;
}

Vector coeffs_from_json(const Json& j, std::size_t dim) {
  if (!j.is_object()) format_error("coeffs must be an object");
  Vector v(dim);
  for (const auto& [key, value] : j.items()) v[key_index(key, dim)] = rational_from_json(value);
  return v;
}

std::size_t dim_from_json(const Json& j) {
  if (!j.is_object()) format_error("expected a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
    format_error("missing or invalid \"dim\"");
  return j["dim"].get<std::size_t>();
}

Json poly_to_json(const MPoly& p, const std::vector<std::string>& names) {
  Json coeffs = Json::object();
  for (const auto& [m, c] : p.terms()) coeffs[MPoly::monomial_key(m, names)] = rational_to_json(c);
  return Json{{"text", p.to_string(names)}, {"coeffs", coeffs}};
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  format_error("rational must be a \"p/q\" string");
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

Vector vector_from_json(const Json& j, std::size_t expected_size) {
  if (!j.is_array() || j.size() != expected_size) format_error("vector of wrong shape");
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) format_error("matrix must be a list of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  std::vector<Vector> r;
  for (const auto& row : j) r.push_back(vector_from_json(row, cols));
  return Matrix::from_rows(r, cols);
}

Json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

Json algebra_to_json(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = lie.basis_bracket(i, j);
      bool listed = false;
      if (i < j) {
        listed = !is_zero(v);
      } else {
        // Lower triangle and diagonal only when they are not the antisymmetric completion.
        const Vector mirror = lie.basis_bracket(j, i);
        listed = i == j ? !is_zero(v) : v != scaled(Rational(-1), mirror);
      }
      if (listed) brackets.push_back(Json{{"i", i}, {"j", j}, {"coeffs", coeffs_to_json(v)}});
    }
  }
  return Json{{"name", lie.name()}, {"dim", n}, {"basis", lie.labels()}, {"brackets", brackets}};
}

LieAlgebra algebra_from_json(const Json& j) {
  const std::size_t n = dim_from_json(j);
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || j["basis"].size() != n) format_error("\"basis\" must list dim labels");
    for (const auto& l : j["basis"]) {
      if (!l.is_string()) format_error("basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  }
  std::string name = "algebra";
  if (j.contains("name")) {
    if (!j["name"].is_string()) format_error("\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  LieAlgebra lie(name, labels);
  if (!j.contains("brackets")) return lie;
  if (!j["brackets"].is_array()) format_error("\"brackets\" must be a list");
  std::map<std::pair<std::size_t, std::size_t>, Vector> listed;
  for (const auto& b : j["brackets"]) {
    if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("coeffs"))
      format_error("bracket entries need i, j, coeffs");
    const std::size_t i = index_from_json(b["i"], n, "i");
    const std::size_t k = index_from_json(b["j"], n, "j");
    if (listed.count({i, k})) format_error("bracket listed twice");
    listed[{i, k}] = coeffs_from_json(b["coeffs"], n);
  }
  for (const auto& [ij, v] : listed) {
    const auto [i, k] = ij;
    for (std::size_t m = 0; m < n; ++m) {
      lie.set_constant(i, k, m, v[m]);
      if (i != k && !listed.count({k, i})) lie.set_constant(k, i, m, -v[m]);
    }
  }
  return lie;
}

Json product_to_json(const CPAProduct& p) {
  Json products = Json::array();
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = i; j < p.dim(); ++j) {
      const Vector v = p.basis_product(i, j);
      if (!is_zero(v)) products.push_back(Json{{"i", i}, {"j", j}, {"coeffs", coeffs_to_json(v)}});
    }
  return Json{{"dim", p.dim()}, {"products", products}};
}

CPAProduct product_from_json(const Json& j) {
  const std::size_t n = dim_from_json(j);
  CPAProduct p(n);
  if (!j.contains("products")) return p;
  if (!j["products"].is_array()) format_error("\"products\" must be a list");
  std::map<std::pair<std::size_t, std::size_t>, Vector> seen;
  for (const auto& e : j["products"]) {
    if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("coeffs"))
      format_error("product entries need i, j, coeffs");
    std::size_t a = index_from_json(e["i"], n, "i");
    std::size_t b = index_from_json(e["j"], n, "j");
    if (a > b) std::swap(a, b);
    Vector v = coeffs_from_json(e["coeffs"], n);
    auto it = seen.find({a, b});
    if (it != seen.end()) {
      if (it->second != v) format_error("product given twice with different values (not commutative)");
      continue;
    }
    p.set(a, b, v);
    seen[{a, b}] = std::move(v);
  }
  return p;
}

Json phi_to_json(const Matrix& phi) { return Json{{"dim", phi.rows()}, {"matrix", matrix_to_json(phi)}}; }

Matrix phi_from_json(const Json& j) {
  const std::size_t n = dim_from_json(j);
  if (!j.contains("matrix")) format_error("missing \"matrix\"");
  const Matrix m = matrix_from_json(j["matrix"]);
  if (m.rows() != n || m.cols() != n) format_error("phi matrix must be dim x dim");
  return m;
}

Json axiom_report_to_json(const AxiomReport& r) {
  Json out{{"ok", r.ok()},
           {"commutativity", r.commutativity_ok},
           {"bracket_action", r.bracket_action_ok},
           {"derivation", r.derivation_ok}};
  if (r.first_violation) {
    const auto& v = *r.first_violation;
    out["first_violation"] = Json{{"axiom", to_string(v.axiom)},
                                  {"triple", {v.x, v.y, v.z}},
                                  {"residual", vector_to_json(v.residual)}};
  } else {
    out["first_violation"] = nullptr;
  }
  return out;
}

Json chain_to_json(const ChainResult& c) {
  Json chain = Json::array();
  for (const auto& s : c.chain) chain.push_back(subspace_to_json(s));
  return Json{{"chain", chain},
              {"chain_dims",
               [&] {
                 Json d = Json::array();
                 for (const auto& s : c.chain) d.push_back(s.dim());
                 return d;
               }()},
              {"i_infinity", subspace_to_json(c.i_infinity)},
              {"k_stable", c.k_stable},
              {"nondegenerate", c.nondegenerate},
              {"nilpotency_index", c.nilpotency_index}};
}

Json classification_to_json(const Classification& c) {
  const auto names = c.parameter_names();
  Json basis = Json::array();
  for (const auto& p : c.linear_basis) basis.push_back(product_to_json(p));
  Json residuals = Json::array();
  for (const auto& r : c.residuals) residuals.push_back(poly_to_json(r, names));
  Json components = Json::array();
  for (const auto& comp : c.components) {
    Json dirs = Json::array();
    for (const auto& d : comp.directions().vectors()) dirs.push_back(vector_to_json(d));
    const auto [a, b] = comp.equations();
    Json eqs = Json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      MPoly lhs = MPoly::affine(a.row(r), -b[r]);
      eqs.push_back(Json{{"coeffs", vector_to_json(a.row(r))}, {"rhs", rational_to_json(b[r])},
                         {"text", lhs.to_string(names) + " = 0"}});
    }
    components.push_back(
        Json{{"dim", comp.dim()}, {"point", vector_to_json(comp.point())}, {"directions", dirs}, {"equations", eqs}});
  }
  Json out{{"kind", to_string(c.kind)},
           {"method", to_string(c.method)},
           {"parameters", names},
           {"linear_basis", basis}};
  if (c.method == Method::Inner) {
    Json phis = Json::array();
    for (const auto& m : c.phi_basis) phis.push_back(matrix_to_json(m));
    out["phi_basis"] = phis;
  }
  out["residuals"] = residuals;
  out["components"] = components;
  const auto vd = c.variety_dim();
  out["variety_dim"] = vd ? Json(*vd) : Json(nullptr);
  if (c.kind == ClassificationKind::Unresolved) out["unresolved_reason"] = c.unresolved_reason;
  return out;
}

Json decomposition_to_json(const Decomposition& d) {
  Json eig = Json::array();
  for (const auto& e : d.eigenvalues) eig.push_back(rational_to_json(e));
  return Json{{"eigenvalues", eig},
              {"n_part", subspace_to_json(d.n_part)},
              {"h_part", subspace_to_json(d.h_part)},
              {"checks",
               {{"n_nilpotent_phi", d.checks.n_nilpotent_phi},
                {"h_automorphism_phi", d.checks.h_automorphism_phi},
                {"h_metabelian", d.checks.h_metabelian},
                {"both_ideals", d.checks.both_ideals},
                {"direct_sum", d.checks.direct_sum},
                {"eigen_bracket_law", d.checks.eigen_bracket_law}}}};
}

Json witness_to_json(const InnerWitness& w) {
  return Json{{"weakly_inner", w.weakly_inner},
              {"inner", w.inner},
              {"nil_inner", w.nil_inner},
              {"phi", matrix_to_json(w.phi)}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) format_error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    format_error("'" + path + "' is not valid JSON: " + e.what());
  }
}

LieAlgebra load_algebra(const std::string& path_or_key) {
  if (std::filesystem::is_regular_file(path_or_key)) return algebra_from_json(read_json_file(path_or_key));
  try {
    return make(parse_catalog_key(path_or_key));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BadParameters && path_or_key.find('(') == std::string::npos &&
        (path_or_key.find('/') != std::string::npos || path_or_key.find(".json") != std::string::npos))
      format_error("cannot open '" + path_or_key + "'");
    throw;
  }
}

}  // namespace cpa
