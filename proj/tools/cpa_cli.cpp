#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cpa/catalog.hpp"
#include "cpa/constructions.hpp"
#include "cpa/error.hpp"
#include "cpa/lie_structure.hpp"
#include "cpa/suite.hpp"

using namespace cpa;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

Vector parse_vector(const std::string& text, std::size_t dim) {
  Vector v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != dim)
    throw Error(ErrorCode::Format, "expected " + std::to_string(dim) + " comma-separated rationals, got '" + text + "'");
  return v;
}

LieAlgebra valid_algebra(const std::string& arg) {
  LieAlgebra lie = load_algebra(arg);
  require_valid(lie);
  return lie;
}

CPAProduct load_product(const std::string& path) { return product_from_json(read_json_file(path)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutative post-Lie algebra structures on Lie algebras, in exact arithmetic"};
  app.require_subcommand(1);
  int exit_code = kOk;

  // catalog
  auto* catalog = app.add_subcommand("catalog", "List or emit catalog algebras");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "Show example keys of every family")->callback([] {
    for (const auto& key : catalog_examples()) {
      std::cout << to_string(key) << "\t" << make(key).dim() << "\n";
    }
  });
  std::string emit_key;
  auto* emit = catalog->add_subcommand("emit", "Print the JSON form of a catalog algebra");
  emit->add_option("key", emit_key, "Catalog key, e.g. borel_sl(3)")->required();
  emit->callback([&] { print(algebra_to_json(make(parse_catalog_key(emit_key)))); });

  // validate
  std::string algebra_arg, product_arg, phi_arg;
  auto* validate_cmd = app.add_subcommand("validate", "Check antisymmetry and the Jacobi identity");
  validate_cmd->add_option("algebra", algebra_arg, "JSON file or catalog key")->required();
  validate_cmd->callback([&] {
    const LieAlgebra lie = load_algebra(algebra_arg);
    const auto violations = validate(lie);
    Json list = Json::array();
    for (const auto& v : violations)
      list.push_back(Json{{"kind", v.kind == ViolationKind::Antisymmetry ? "antisymmetry" : "jacobi"},
                          {"triple", {v.i, v.j, v.k}},
                          {"residual", vector_to_json(v.residual)}});
    print(Json{{"name", lie.name()}, {"dim", lie.dim()}, {"valid", violations.empty()}, {"violations", list}});
    if (!violations.empty()) exit_code = kCheckFailed;
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check the CPA axioms for a product");
  verify_cmd->add_option("algebra", algebra_arg, "JSON file or catalog key")->required();
  verify_cmd->add_option("product", product_arg, "Product JSON file")->required();
  verify_cmd->callback([&] {
    const LieAlgebra lie = valid_algebra(algebra_arg);
    const auto report = verify_cpa(lie, load_product(product_arg));
    print(axiom_report_to_json(report));
    if (!report.ok()) exit_code = kCheckFailed;
  });

  // chain
  auto* chain_cmd = app.add_subcommand("chain", "Annihilator and ascending ideal chain of a product");
  chain_cmd->add_option("algebra", algebra_arg, "JSON file or catalog key")->required();
  chain_cmd->add_option("product", product_arg, "Product JSON file")->required();
  chain_cmd->callback([&] {
    const LieAlgebra lie = valid_algebra(algebra_arg);
    const CPAProduct p = load_product(product_arg);
    Json out = chain_to_json(ideal_chain(lie, p));
    out["annihilator"] = subspace_to_json(annihilator(p));
    print(out);
  });

  // classify
  std::string method = "general";
  auto* classify_cmd = app.add_subcommand("classify", "Solve for all CPA products");
  classify_cmd->add_option("algebra", algebra_arg, "JSON file or catalog key")->required();
  classify_cmd->add_option("--method", method, "general or inner")->check(CLI::IsMember({"general", "inner"}));
  classify_cmd->callback([&] {
    const LieAlgebra lie = valid_algebra(algebra_arg);
    Json out = classification_to_json(classify(lie, method == "inner" ? Method::Inner : Method::General));
    out["algebra"] = lie.name();
    print(out);
  });

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "Eigenspace decomposition for x.y = [phi x, y]");
  decompose_cmd->add_option("algebra", algebra_arg, "JSON file or catalog key")->required();
  decompose_cmd->add_option("phi", phi_arg, "phi JSON file")->required();
  decompose_cmd->callback([&] {
    const LieAlgebra lie = valid_algebra(algebra_arg);
    const auto d = phi_decompose(lie, phi_from_json(read_json_file(phi_arg)));
    print(decomposition_to_json(d));
    if (!d.checks.all()) exit_code = kCheckFailed;
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Build a product from a recipe; prints product JSON");
  construct->require_subcommand(1);
  std::size_t cocycle_index = 0;
  auto* cocycle = construct->add_subcommand("cocycle", "x.y = [f(x mod I), y] for a cocycle f, I = [L, L]");
  cocycle->add_option("algebra", algebra_arg, "JSON file or catalog key")->required();
  cocycle->add_option("--index", cocycle_index, "Which basis cocycle to use");
  cocycle->callback([&] {
    const LieAlgebra lie = valid_algebra(algebra_arg);
    const Subspace ideal = derived_algebra(lie);
    const auto basis = cocycle_space(lie, ideal);
    if (cocycle_index >= basis.size()) {
      std::cerr << "cocycle space has dimension " << basis.size() << "\n";
      exit_code = kCheckFailed;
      return;
    }
    print(product_to_json(cocycle_product(lie, ideal, basis[cocycle_index])));
  });
  std::string z_text;
  auto* central = construct->add_subcommand("central-z", "x.y = [[z, x], y] for z in Z([L, L])");
  central->add_option("algebra", algebra_arg, "JSON file or catalog key")->required();
  central->add_option("z", z_text, "Comma-separated coordinates, e.g. 0,1,0,0,0")->required();
  central->callback([&] {
    const LieAlgebra lie = valid_algebra(algebra_arg);
    print(product_to_json(central_z_product(lie, derived_algebra(lie), parse_vector(z_text, lie.dim()))));
  });
  std::string v_text;
  auto* eigen = construct->add_subcommand("eigenfunctional", "x.y = [x, [y, v]] for a common eigenvector v");
  eigen->add_option("algebra", algebra_arg, "JSON file or catalog key")->required();
  eigen->add_option("v", v_text, "Comma-separated coordinates; searched for when omitted");
  eigen->callback([&] {
    const LieAlgebra lie = valid_algebra(algebra_arg);
    Vector v;
    if (v_text.empty()) {
      auto found = find_common_eigenvector(lie);
      if (!found) {
        std::cerr << "no rational common eigenvector found; pass v explicitly\n";
        exit_code = kCheckFailed;
        return;
      }
      v = *found;
    } else {
      v = parse_vector(v_text, lie.dim());
    }
    print(product_to_json(lie_eigenfunctional_product(lie, v).product));
  });
  auto* center = construct->add_subcommand("center-construction", "x.y = l(x) l(y) z with z central");
  center->add_option("algebra", algebra_arg, "JSON file or catalog key")->required();
  center->callback([&] { print(product_to_json(center_construction_product(valid_algebra(algebra_arg)))); });
  std::string alg2, prod2, algebra_out;
  auto* comp = construct->add_subcommand("componentwise", "Factorwise product on a direct sum");
  comp->add_option("algebra1", algebra_arg)->required();
  comp->add_option("product1", product_arg)->required();
  comp->add_option("algebra2", alg2)->required();
  comp->add_option("product2", prod2)->required();
  comp->add_option("--algebra-out", algebra_out, "Write the direct sum algebra JSON here");
  comp->callback([&] {
    const LieAlgebra l1 = valid_algebra(algebra_arg), l2 = valid_algebra(alg2);
    const auto [sum, p] = componentwise_product(l1, load_product(product_arg), l2, load_product(prod2));
    if (!algebra_out.empty()) {
      std::ofstream out(algebra_out);
      if (!out) throw Error(ErrorCode::Format, "cannot write '" + algebra_out + "'");
      out << algebra_to_json(sum).dump(2) << "\n";
    }
    print(product_to_json(p));
  });

  // suite
  std::string case_id;
  bool as_json = false;
  auto* suite = app.add_subcommand("suite", "Run the named checks");
  suite->add_option("--case", case_id, "Run a single case");
  suite->add_flag("--json", as_json, "Machine-readable output");
  suite->callback([&] {
    const std::vector<SuiteCase> cases = case_id.empty() ? run_suite() : std::vector<SuiteCase>{run_case(case_id)};
    if (as_json) {
      print(suite_to_json(cases));
    } else {
      for (const auto& c : cases) std::cout << to_string(c.status) << "  " << c.id << "\n";
    }
    for (const auto& c : cases)
      if (c.status == CaseStatus::Fail) exit_code = kCheckFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::Format || e.code() == ErrorCode::BadParameters;
    return usage ? kUsage : kCheckFailed;
  }
  return exit_code;
}
