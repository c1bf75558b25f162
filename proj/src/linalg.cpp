#include "cpa/linalg.hpp"

#include <utility>

#include "cpa/error.hpp"

namespace cpa {

RrefResult rref(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RrefResult out;
  std::size_t pivot_row = 0;
  std::vector<std::size_t> nonzero_cols;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (!is_zero(m(r, col))) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    if (found != pivot_row) {
      for (std::size_t c = col; c < cols; ++c) std::swap(m(found, c), m(pivot_row, c));
    }
    const Rational inv = 1 / m(pivot_row, col);
    nonzero_cols.clear();
    for (std::size_t c = col; c < cols; ++c) {
      if (!is_zero(m(pivot_row, c))) {
        m(pivot_row, c) *= inv;
        nonzero_cols.push_back(c);
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || is_zero(m(r, col))) continue;
      const Rational factor = m(r, col);
      for (std::size_t c : nonzero_cols) m(r, c) -= factor * m(pivot_row, c);
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  out.rank = pivot_row;
  out.matrix = std::move(m);
  return out;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t n) { return row_space(Matrix::identity(n)); }

Subspace Subspace::span(std::size_t n, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(vectors, n));
}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult r = rref(m);
  Subspace s(m.cols());
  s.basis_ = Matrix(r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) s.basis_(i, c) = r.matrix(i, c);
  s.pivots_ = std::move(r.pivots);
  return s;
}

std::vector<Vector> Subspace::vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorCode::DimensionMismatch, "Subspace::reduce");
  Vector r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Rational coeff = r[pivots_[i]];
    if (cpa::is_zero(coeff)) continue;
    for (std::size_t c = pivots_[i]; c < ambient_dim_; ++c) {
      if (!cpa::is_zero(basis_(i, c))) r[c] -= coeff * basis_(i, c);
    }
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return cpa::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw Error(ErrorCode::DimensionMismatch, "Subspace::contains");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

Matrix Subspace::equations() const { return kernel(basis_).basis(); }

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error(ErrorCode::DimensionMismatch, "vector not in subspace");
  Vector coords(dim());
  for (std::size_t i = 0; i < dim(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "subspace sum");
  return Subspace::row_space(vstack({a.basis(), b.basis()}));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "subspace intersection");
  return kernel(vstack({a.equations(), b.equations()}));
}

Subspace image(const Matrix& m, const Subspace& s) {
  std::vector<Vector> images;
  for (std::size_t i = 0; i < s.dim(); ++i) images.push_back(m * s.vector(i));
  return Subspace::span(m.rows(), images);
}

Subspace kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.matrix(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(cols, basis);
}

std::optional<AffineSolution> solve_affine(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve_affine right-hand side");
  const std::size_t cols = m.cols();
  Matrix augmented(m.rows(), cols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) augmented(r, c) = m(r, c);
    augmented(r, cols) = b[r];
  }
  const RrefResult r = rref(std::move(augmented));
  if (!r.pivots.empty() && r.pivots.back() == cols) return std::nullopt;
  Vector particular(cols);
  for (std::size_t i = 0; i < r.rank; ++i) particular[r.pivots[i]] = r.matrix(i, cols);
  return AffineSolution{std::move(particular), kernel(m)};
}

}  // namespace cpa
