#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cpa/cpa_product.hpp"

namespace cpa {

/// Basis of the cocycles f: L/I -> Z(I) with [f(x̄), y] = [f(ȳ), x]. Each f is
/// an n x q matrix taking quotient coordinates (the complement columns of I)
/// to L. Requires I to be an ideal with abelian quotient.
std::vector<Matrix> cocycle_space(const LieAlgebra& lie, const Subspace& ideal);

/// x · y = [f(x̄), y]. Throws Error(NotACocycle) if f is not in cocycle_space.
CPAProduct cocycle_product(const LieAlgebra& lie, const Subspace& ideal, const Matrix& f);

/// x · y = [[z, x], y] for z in Z(I). Throws Error(NotCentralInI) otherwise.
CPAProduct central_z_product(const LieAlgebra& lie, const Subspace& ideal, const Vector& z);

struct EigenfunctionalProduct {
  CPAProduct product;
  Vector lambda;  // [e_i, v] = λ_i v
};

/// x · y = [x, [y, v]] = λ(x) λ(y) v for a common eigenvector v of a
/// solvable L.
EigenfunctionalProduct lie_eigenfunctional_product(const LieAlgebra& lie, const Vector& v);

/// Nonzero v with [e_i, v] ∈ span{v} for all i, searched through the rational
/// eigenspaces of the ad(e_i).
std::optional<Vector> find_common_eigenvector(const LieAlgebra& lie);

struct CenterConstruction {
  CPAProduct product;
  Vector z;        // the central element the product lands in
  Vector lambda;   // x · y = λ(x) λ(y) z
  bool z_in_derived = false;
};

/// For L not perfect with nonzero center. Throws Error(IsPerfect) or
/// Error(TrivialCenter).
CenterConstruction center_construction(const LieAlgebra& lie);
CPAProduct center_construction_product(const LieAlgebra& lie);

/// Product on direct_sum(l1, l2) acting factorwise, cross terms zero.
std::pair<LieAlgebra, CPAProduct> componentwise_product(const LieAlgebra& l1, const CPAProduct& p1,
                                                         const LieAlgebra& l2, const CPAProduct& p2);

}  // namespace cpa
