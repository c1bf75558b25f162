#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cpa/matrix.hpp"

namespace cpa {

struct RrefResult {
  Matrix matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row-echelon form. Pivot search is leftmost column, topmost row,
/// so the result is deterministic.
RrefResult rref(Matrix m);

/// A subspace of K^n held as the nonzero rows of its reduced row-echelon
/// basis. Two subspaces are equal iff their basis matrices are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n);
  static Subspace span(std::size_t n, const std::vector<Vector>& vectors);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> vectors() const;
  Vector vector(std::size_t i) const { return basis_.row(i); }

  /// v minus its component along the basis; zero exactly at pivot columns.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Rows c_1..c_m with: v in this subspace iff c_i . v = 0 for all i.
  Matrix equations() const;
  /// Coordinates of v in the RREF basis; v must lie in the subspace.
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Image of a subspace under a linear map.
Subspace image(const Matrix& m, const Subspace& s);

/// {v : m v = 0}
Subspace kernel(const Matrix& m);

struct AffineSolution {
  Vector particular;
  Subspace kernel;
};

/// Solutions of m x = b, or nullopt when the system is inconsistent.
/// The particular solution has zeros at every free column.
std::optional<AffineSolution> solve_affine(const Matrix& m, const Vector& b);

}  // namespace cpa
