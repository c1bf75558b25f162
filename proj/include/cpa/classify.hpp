#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpa/cpa_product.hpp"
#include "cpa/mpoly.hpp"
#include "cpa/resolver.hpp"

namespace cpa {

/// Basis of the products satisfying the two linear axioms (commutativity and
/// "every L(x) is a derivation"), canonical up to RREF of the flattened
/// coordinates.
std::vector<CPAProduct> solve_linear_part(const LieAlgebra& lie);

/// Σ t_a basis[a]
CPAProduct combine(const std::vector<CPAProduct>& basis, const Vector& t);

/// Bracket-action residuals of Σ t_a basis[a], one per (i < j, k, output
/// coordinate) with zero polynomials dropped.
std::vector<MPoly> quadratic_residuals(const LieAlgebra& lie, const std::vector<CPAProduct>& basis);

/// All axiom residuals of the family Σ t_a basis[a] over every basis triple,
/// computed without assuming anything about the basis.
std::vector<MPoly> family_axiom_residuals(const LieAlgebra& lie, const std::vector<CPAProduct>& basis);

/// Solutions φ of [φx, y] = [φy, x]; φ(e_j) is column j.
std::vector<Matrix> weakly_inner_phi_basis(const LieAlgebra& lie);
/// φ[e_i, e_j] - [φe_i, φe_j] for φ = Σ t_a phi_basis[a], zero polynomials dropped.
std::vector<MPoly> hom_residuals(const LieAlgebra& lie, const std::vector<Matrix>& phi_basis);
/// x · y = [φx, y]; throws Error(NotACPA) if that is not commutative.
CPAProduct product_from_phi(const LieAlgebra& lie, const Matrix& phi);

enum class ClassificationKind { Trivial, FullLinearSpace, ComponentUnion, Unresolved };
enum class Method { General, Inner };
std::string to_string(ClassificationKind kind);
std::string to_string(Method method);

struct Classification {
  ClassificationKind kind = ClassificationKind::Trivial;
  Method method = Method::General;
  std::vector<CPAProduct> linear_basis;
  std::vector<Matrix> phi_basis;  // inner method only, same parameters as linear_basis
  std::vector<MPoly> residuals;   // distinct, normalized
  std::vector<AffineSpace> components;
  std::string unresolved_reason;

  std::size_t parameter_count() const { return linear_basis.size(); }
  std::vector<std::string> parameter_names() const { return default_parameter_names(parameter_count()); }
  /// Dimension of the variety; empty when unresolved.
  std::optional<std::size_t> variety_dim() const;
  CPAProduct product_at(const Vector& t) const;
  Matrix phi_at(const Vector& t) const;
};

/// Inner requires is_complete(lie), else Error(NotComplete).
Classification classify(const LieAlgebra& lie, Method method, const ResolveOptions& options = {});

struct InnerSolveResult {
  std::vector<Matrix> phi_basis;
  std::vector<MPoly> hom_residuals;
  Classification classification;
};

InnerSolveResult inner_solve(const LieAlgebra& lie, const ResolveOptions& options = {});

/// Every product on the component satisfies all axioms: the family residuals
/// vanish identically on it and verify_cpa passes at sample points.
bool component_sound(const LieAlgebra& lie, const Classification& c, const AffineSpace& component);

}  // namespace cpa
