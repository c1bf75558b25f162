#include "cpa/lie_algebra.hpp"

#include "cpa/error.hpp"

namespace cpa {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)), dim_(labels_.size()), c_(dim_ * dim_ * dim_) {}

void LieAlgebra::set_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw Error(ErrorCode::DimensionMismatch, "structure constant index");
  c_[(i * dim_ + j) * dim_ + k] = value;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "bracket value length");
  for (std::size_t k = 0; k < dim_; ++k) {
    set_constant(i, j, k, value[k]);
    set_constant(j, i, k, -value[k]);
  }
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
  return v;
}

Vector bracket(const LieAlgebra& lie, const Vector& x, const Vector& y) {
  const std::size_t n = lie.dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::DimensionMismatch, "bracket argument length");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(lie.c(i, j, k))) out[k] += xy * lie.c(i, j, k);
      }
    }
  }
  return out;
}

Matrix adjoint(const LieAlgebra& lie, const Vector& x) {
  const std::size_t n = lie.dim();
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "adjoint argument length");
  Matrix ad(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(lie.c(i, j, k))) ad(k, j) += x[i] * lie.c(i, j, k);
      }
  }
  return ad;
}

std::vector<Violation> validate(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  std::vector<Violation> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vector residual(n);
      std::size_t first = n;
      for (std::size_t k = 0; k < n; ++k) {
        residual[k] = lie.c(i, j, k) + lie.c(j, i, k);
        if (first == n && !is_zero(residual[k])) first = k;
      }
      if (first != n) out.push_back({ViolationKind::Antisymmetry, i, j, first, std::move(residual)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i);
        const Vector ej = unit_vector(n, j);
        const Vector ek = unit_vector(n, k);
        Vector sum = bracket(lie, ei, lie.basis_bracket(j, k));
        sum = add(sum, bracket(lie, ej, lie.basis_bracket(k, i)));
        sum = add(sum, bracket(lie, ek, lie.basis_bracket(i, j)));
        if (!is_zero(sum)) out.push_back({ViolationKind::Jacobi, i, j, k, std::move(sum)});
      }
    }
  }
  return out;
}

}  // namespace cpa
