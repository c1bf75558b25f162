#pragma once

#include <string>
#include <vector>

#include "cpa/lie_algebra.hpp"

namespace cpa {

enum class Family { Abelian, Heisenberg, SL, BorelSL, ParabolicSL, Example36, SL2SemidirectV };

/// Names an algebra of the catalog. `n` is the size parameter where the
/// family has one; `roots` lists the simple roots (1-based) whose negative
/// root spaces a parabolic subalgebra contains.
struct CatalogKey {
  Family family = Family::Abelian;
  int n = 0;
  std::vector<int> roots;

  friend bool operator==(const CatalogKey&, const CatalogKey&) = default;
};

/// Text form: abelian(n), heisenberg, sl(n), borel_sl(n),
/// parabolic_sl(n,r1,r2,...), example_3_6, sl2_semidirect_V(n).
std::string to_string(const CatalogKey& key);
/// Inverse of to_string; throws Error(BadParameters) on unknown names or
/// out-of-range parameters.
CatalogKey parse_catalog_key(const std::string& text);
/// One representative key per family, in a fixed order.
std::vector<CatalogKey> catalog_examples();

LieAlgebra make(const CatalogKey& key);

LieAlgebra abelian(int n);
/// [e1, e2] = e3
LieAlgebra heisenberg();
/// Basis: E_ij (i != j, lexicographic), then H_i = E_ii - E_{i+1,i+1}.
LieAlgebra sl(int n);
/// Upper triangular part of sl(n): E_ij (i < j, lexicographic), then H_i.
LieAlgebra borel_sl(int n);
/// Borel plus the negative root vectors E_{j,i} (i < j) whose simple roots
/// i..j-1 all lie in `roots`. Basis: positive root vectors, negative root
/// vectors, then H_i.
LieAlgebra parabolic_sl(int n, const std::vector<int>& roots);
/// Basis (E12, E13, E21, E23, E11 - E22, E22 - E33) inside sl(3).
LieAlgebra example_3_6();
/// sl(2) ⋉ V(n) with V(n) the irreducible n-dimensional module.
LieAlgebra sl2_semidirect_V(int n);

/// Structure constants of a matrix Lie algebra spanned by `basis`
/// (commutators must stay in the span).
LieAlgebra from_matrix_basis(std::string name, std::vector<std::string> labels, const std::vector<Matrix>& basis);

struct BorelCenterElement {
  LieAlgebra algebra;  // borel_sl(k + 1)
  Vector z;            // coordinates of E_{1,k+1}
  std::vector<std::size_t> h_indices;  // H_1 .. H_k
};

/// Requires k >= 2.
BorelCenterElement borel_center_element(int k);

}  // namespace cpa
