#pragma once

#include <optional>
#include <vector>

#include "cpa/classify.hpp"

namespace cpa {

struct InnerWitness {
  Matrix phi;  // L(x) = ad(φx)
  bool weakly_inner = true;
  bool inner = false;      // φ is a Lie homomorphism
  bool nil_inner = false;  // inner with φ nilpotent
};

bool is_homomorphism(const LieAlgebra& lie, const Matrix& phi);
/// φ^dim = 0
bool is_nilpotent(const Matrix& m);

/// Empty when the product is not weakly inner. Throws Error(NotACPA) when the
/// product fails verify_cpa.
std::optional<InnerWitness> detect_inner(const LieAlgebra& lie, const CPAProduct& p);

struct DecompositionChecks {
  bool n_nilpotent_phi = false;
  bool h_automorphism_phi = false;
  bool h_metabelian = false;
  bool both_ideals = false;
  bool direct_sum = false;
  bool eigen_bracket_law = false;  // [g_a, g_b] ⊆ g_ab, and nonzero only if a + b = 0

  bool all() const {
    return n_nilpotent_phi && h_automorphism_phi && h_metabelian && both_ideals && direct_sum && eigen_bracket_law;
  }
};

struct Decomposition {
  Subspace n_part;  // generalized eigenspace of 0
  Subspace h_part;  // sum of the others
  std::vector<Rational> eigenvalues;  // ascending, distinct
  DecompositionChecks checks;
};

/// Throws Error(NotACPA) if x·y = [φx, y] is not a CPA structure and
/// Error(UnsupportedSpectrum) if φ has non-rational eigenvalues.
Decomposition phi_decompose(const LieAlgebra& lie, const Matrix& phi);

}  // namespace cpa
