#pragma once

#include <string>
#include <vector>

#include "cpa/matrix.hpp"

namespace cpa {

/// Finite-dimensional Lie algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i, j, k) e_k.
///
/// The table is stored as given. `set_bracket` keeps it antisymmetric,
/// `set_constant` does not, so invalid tables can be represented and then
/// diagnosed by `validate`.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Abelian algebra on the given basis labels.
  LieAlgebra(std::string name, std::vector<std::string> labels);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  void set_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& value);
  /// [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  /// [e_i, e_j] as a coordinate vector.
  Vector basis_bracket(std::size_t i, std::size_t j) const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

Vector bracket(const LieAlgebra& lie, const Vector& x, const Vector& y);
/// ad(x), so that adjoint(L, x) * y == bracket(L, x, y).
Matrix adjoint(const LieAlgebra& lie, const Vector& x);

enum class ViolationKind { Antisymmetry, Jacobi };

struct Violation {
  ViolationKind kind;
  std::size_t i, j, k;
  /// Antisymmetry: c(i,j,.) + c(j,i,.). Jacobi: the cyclic sum
  /// [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]].
  Vector residual;
};

/// Every antisymmetry failure (i <= j, reported at the first offending
/// coordinate k) followed by every Jacobi failure over i < j < k.
std::vector<Violation> validate(const LieAlgebra& lie);

}  // namespace cpa
