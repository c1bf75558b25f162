#pragma once

#include <vector>

#include "cpa/lie_algebra.hpp"
#include "cpa/linalg.hpp"

namespace cpa {

/// Throws InvalidAlgebra if validate() reports anything.
void require_valid(const LieAlgebra& lie);

/// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& lie, const Subspace& a, const Subspace& b);
Subspace derived_algebra(const LieAlgebra& lie);
/// Smallest ideal containing S.
Subspace ideal_generated(const LieAlgebra& lie, const Subspace& s);
bool is_ideal(const LieAlgebra& lie, const Subspace& s);
Subspace center(const LieAlgebra& lie);
/// Z(I) = {z in I : [z, I] = 0}
Subspace center_of(const LieAlgebra& lie, const Subspace& ideal);
/// K(x, y) = tr(ad x ad y) in the basis e_i.
Matrix killing_form(const LieAlgebra& lie);
/// Solvable radical as the Killing-orthogonal complement of [L, L]
/// (characteristic zero).
Subspace radical(const LieAlgebra& lie);

struct StructReport {
  bool solvable = false;
  bool nilpotent = false;
  bool perfect = false;
  bool abelian = false;
  bool metabelian = false;
  /// L = D0 > D1 > ... up to and including the first repeated term.
  std::vector<Subspace> derived_series;
  std::vector<Subspace> lower_central_series;
  Subspace center;
  Subspace radical;
};

StructReport structure_report(const LieAlgebra& lie);

/// Der(L) as a subspace of n*n matrices flattened row-major.
Subspace derivations(const LieAlgebra& lie);
/// ad(L) in the same flattened coordinates.
Subspace inner_derivations(const LieAlgebra& lie);
std::vector<Matrix> as_matrices(const Subspace& flat, std::size_t n);
/// Trivial center and Der(L) = ad(L).
bool is_complete(const LieAlgebra& lie);

/// Ideals readily at hand: 0, L, derived and lower central series terms,
/// the center and the radical. Deduplicated, in discovery order.
std::vector<Subspace> standard_ideals(const LieAlgebra& lie);

struct Quotient {
  LieAlgebra algebra;
  /// q x n matrix sending coordinates in L to coordinates in L / I.
  Matrix projection;
  /// Basis indices of L whose images form the quotient basis.
  std::vector<std::size_t> complement;
};

/// L / I using the non-pivot basis vectors of I as representatives.
Quotient quotient(const LieAlgebra& lie, const Subspace& ideal);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
/// base ⋉ K^module_dim where rep[i] is the action of the i-th basis element.
LieAlgebra semidirect(const LieAlgebra& base, const std::vector<Matrix>& rep, std::size_t module_dim);

struct FixWitness {
  Vector x;
  Vector y;  // [y, x] = x
};

struct FixResult {
  /// Ideal generated by the witnesses: a lower bound for fix(L), always
  /// inside [L, L].
  Subspace ideal;
  std::vector<FixWitness> witnesses;
};

/// Searches the basis vectors and 64 pseudo-random integer combinations
/// (seed 0x5EED) for x admitting y with [y, x] = x.
FixResult fix_witness_ideal(const LieAlgebra& lie);

}  // namespace cpa
