#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpa/lie_algebra.hpp"
#include "cpa/linalg.hpp"

namespace cpa {

/// Commutative bilinear product given by d(i, j, k), the e_k-coefficient of
/// e_i · e_j. Symmetry in (i, j) is enforced by every setter.
class CPAProduct {
 public:
  CPAProduct() = default;
  explicit CPAProduct(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Rational& d(std::size_t i, std::size_t j, std::size_t k) const { return d_[(i * dim_ + j) * dim_ + k]; }
  void set_entry(std::size_t i, std::size_t j, std::size_t k, const Rational& value);
  void set(std::size_t i, std::size_t j, const Vector& value);
  Vector basis_product(std::size_t i, std::size_t j) const;

  Vector operator()(const Vector& x, const Vector& y) const;
  /// Matrix of y -> x · y.
  Matrix left(const Vector& x) const;
  Matrix left_basis(std::size_t i) const;
  bool is_zero() const;

  /// Coordinates over the pairs i <= j (lexicographic), then k.
  Vector flatten() const;
  static CPAProduct unflatten(std::size_t dim, const Vector& flat);
  static std::size_t flat_size(std::size_t dim) { return dim * (dim + 1) / 2 * dim; }

  friend bool operator==(const CPAProduct&, const CPAProduct&) = default;
  friend CPAProduct operator+(const CPAProduct& a, const CPAProduct& b);
  friend CPAProduct operator-(const CPAProduct& a, const CPAProduct& b);
  friend CPAProduct operator*(const Rational& s, const CPAProduct& p);

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> d_;
};

enum class Axiom { Commutativity, BracketAction, Derivation };
std::string to_string(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  std::size_t x, y, z;  // basis triple
  Vector residual;
};

/// Commutativity: x·y = y·x.
/// Bracket action: [x,y]·z = x·(y·z) - y·(x·z).
/// Derivation: x·[y,z] = [x·y, z] + [y, x·z].
struct AxiomReport {
  bool commutativity_ok = true;
  bool bracket_action_ok = true;
  bool derivation_ok = true;
  std::optional<AxiomViolation> first_violation;

  bool ok() const { return commutativity_ok && bracket_action_ok && derivation_ok; }
};

/// Exhaustive check over all basis triples. Does not re-validate the bracket.
AxiomReport verify_cpa(const LieAlgebra& lie, const CPAProduct& p);
/// Throws Error(NotACPA) unless verify_cpa passes.
void require_cpa(const LieAlgebra& lie, const CPAProduct& p);

Subspace annihilator(const CPAProduct& p);

struct ChainResult {
  std::vector<Subspace> chain;  // I_0 = 0, I_1 = Ann, ..., I_k = I_inf (no repeats)
  Subspace i_infinity;
  std::size_t k_stable = 0;
  bool nondegenerate = false;  // of the quotient by I_inf
  std::size_t nilpotency_index = 0;  // smallest k >= 1 with I_inf^[k] ⊆ Ann, 0 if none
};

ChainResult ideal_chain(const LieAlgebra& lie, const CPAProduct& p);

/// I^[1] = I, I^[k+1] = [I, I^[k]].
Subspace bracket_power(const LieAlgebra& lie, const Subspace& ideal, std::size_t k);

bool is_product_ideal(const CPAProduct& p, const Subspace& s);
/// s · A = 0
bool annihilates(const CPAProduct& p, const Subspace& s);

struct QuotientCPA {
  LieAlgebra algebra;
  CPAProduct product;
  Matrix projection;
};

QuotientCPA quotient_cpa(const LieAlgebra& lie, const CPAProduct& p, const Subspace& ideal);

bool is_nondegenerate(const CPAProduct& p);
bool is_associative(const CPAProduct& p);

}  // namespace cpa
