#pragma once

#include <string>

#include <json.hpp>

#include "cpa/classify.hpp"
#include "cpa/cpa_product.hpp"
#include "cpa/inner.hpp"

namespace cpa {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings. Readers also accept JSON integers.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, std::size_t expected_size);
Json matrix_to_json(const Matrix& m);  // list of rows
Matrix matrix_from_json(const Json& j);
Json subspace_to_json(const Subspace& s);  // list of basis rows

/// {"name", "dim", "basis", "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]},
/// 0-based indices. Pairs i < j are listed; entries that break
/// antisymmetry are listed as well so that emit/read is the identity.
Json algebra_to_json(const LieAlgebra& lie);
/// A listed (i, j) sets that bracket; (j, i) is completed antisymmetrically
/// unless listed itself. Throws Error(Format).
LieAlgebra algebra_from_json(const Json& j);

/// {"dim", "products": [{"i", "j", "coeffs"}]} with i <= j.
Json product_to_json(const CPAProduct& p);
/// A pair given in both orders with different values is a format error.
CPAProduct product_from_json(const Json& j);

/// {"dim", "matrix": rows}; column j is φ(e_j).
Json phi_to_json(const Matrix& phi);
Matrix phi_from_json(const Json& j);

Json axiom_report_to_json(const AxiomReport& r);
Json chain_to_json(const ChainResult& c);
Json classification_to_json(const Classification& c);
Json decomposition_to_json(const Decomposition& d);
Json witness_to_json(const InnerWitness& w);

Json read_json_file(const std::string& path);
/// Path to a JSON file if one exists, else a catalog key.
LieAlgebra load_algebra(const std::string& path_or_key);

}  // namespace cpa
