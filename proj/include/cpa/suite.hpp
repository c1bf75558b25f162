#pragma once

#include <string>
#include <vector>

#include "cpa/io.hpp"

namespace cpa {

enum class CaseStatus { Pass, Fail, Unsupported };
std::string to_string(CaseStatus s);

struct SuiteCase {
  std::string id;
  CaseStatus status = CaseStatus::Fail;
  Json details;
};

/// Sorted case ids.
std::vector<std::string> suite_case_ids();
/// Throws Error(BadParameters) for an unknown id.
SuiteCase run_case(const std::string& id);
/// All cases in id order.
std::vector<SuiteCase> run_suite();
Json suite_to_json(const std::vector<SuiteCase>& cases);

/// Heisenberg product e1·e1 = e2, e1·e2 = μ e3.
CPAProduct heisenberg_a_mu(const Rational& mu);
/// borel_sl(2) product e1·e2 = α e1, e2·e2 = β e1.
CPAProduct borel_sl2_product(const Rational& alpha, const Rational& beta);
/// ½ [[-α, -β], [0, α]]
Matrix borel_sl2_phi(const Rational& alpha, const Rational& beta);

/// "x*y": "c*z + ..." for every nonzero basis product, i <= j.
Json product_table(const LieAlgebra& lie, const CPAProduct& p);

}  // namespace cpa
