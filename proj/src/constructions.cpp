#include "cpa/constructions.hpp"

#include <functional>

#include "cpa/error.hpp"
#include "cpa/lie_structure.hpp"
#include "cpa/polynomial.hpp"

namespace cpa {

namespace {

void require_abelian_quotient(const LieAlgebra& lie, const Subspace& ideal) {
  require_valid(lie);
  if (ideal.ambient_dim() != lie.dim()) throw Error(ErrorCode::DimensionMismatch, "ideal ambient dimension");
  if (!is_ideal(lie, ideal)) throw Error(ErrorCode::NotAnIdeal, "subspace is not a Lie ideal");
  if (!ideal.contains(derived_algebra(lie)))
    throw Error(ErrorCode::QuotientNotAbelian, "quotient by the ideal is not abelian");
}

// Quotient coordinates of each basis vector e_i (q x n).
Matrix projection(const LieAlgebra& lie, const Subspace& ideal) { return quotient(lie, ideal).projection; }

bool satisfies_cocycle(const LieAlgebra& lie, const Matrix& proj, const Matrix& f) {
  const std::size_t n = lie.dim();
  std::vector<Vector> fx(n);
  for (std::size_t i = 0; i < n; ++i) fx[i] = f * proj.column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (bracket(lie, fx[i], unit_vector(n, j)) != bracket(lie, fx[j], unit_vector(n, i))) return false;
  return true;
}

}  // namespace

std::vector<Matrix> cocycle_space(const LieAlgebra& lie, const Subspace& ideal) {
  require_abelian_quotient(lie, ideal);
  const std::size_t n = lie.dim();
  const Subspace z = center_of(lie, ideal);
  const Matrix proj = projection(lie, ideal);
  const std::size_t q = proj.rows(), zd = z.dim();
  const auto zv = z.vectors();
  // Unknown s(a, c) at column a * zd + c: f(ē_a) = Σ_c s(a, c) z_c.
  // Row per (i < j, m): [f(ē_i), e_j]_m - [f(ē_j), e_i]_m = 0.
  std::vector<std::vector<Vector>> zbr(zd, std::vector<Vector>(n));
  for (std::size_t c = 0; c < zd; ++c)
    for (std::size_t j = 0; j < n; ++j) zbr[c][j] = bracket(lie, zv[c], unit_vector(n, j));
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        Vector row(q * zd);
        for (std::size_t a = 0; a < q; ++a)
          for (std::size_t c = 0; c < zd; ++c) {
            row[a * zd + c] += proj(a, i) * zbr[c][j][m];
            row[a * zd + c] -= proj(a, j) * zbr[c][i][m];
          }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  std::vector<Matrix> out;
  for (const auto& s : kernel(Matrix::from_rows(rows, q * zd)).vectors()) {
    Matrix f(n, q);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t c = 0; c < zd; ++c)
        for (std::size_t r = 0; r < n; ++r) f(r, a) += s[a * zd + c] * zv[c][r];
    out.push_back(std::move(f));
  }
  return out;
}

CPAProduct cocycle_product(const LieAlgebra& lie, const Subspace& ideal, const Matrix& f) {
  require_abelian_quotient(lie, ideal);
  const std::size_t n = lie.dim();
  const Matrix proj = projection(lie, ideal);
  if (f.rows() != n || f.cols() != proj.rows()) throw Error(ErrorCode::DimensionMismatch, "cocycle shape");
  const Subspace z = center_of(lie, ideal);
  for (std::size_t a = 0; a < f.cols(); ++a)
    if (!z.contains(f.column(a))) throw Error(ErrorCode::NotACocycle, "cocycle value outside Z(I)");
  if (!satisfies_cocycle(lie, proj, f)) throw Error(ErrorCode::NotACocycle, "symmetric cocycle condition fails");
  CPAProduct p(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector fi = f * proj.column(i);
    for (std::size_t j = i; j < n; ++j) p.set(i, j, bracket(lie, fi, unit_vector(n, j)));
  }
  return p;
}

CPAProduct central_z_product(const LieAlgebra& lie, const Subspace& ideal, const Vector& z) {
  require_valid(lie);
  const std::size_t n = lie.dim();
  if (z.size() != n || ideal.ambient_dim() != n) throw Error(ErrorCode::DimensionMismatch, "central_z_product");
  if (!is_ideal(lie, ideal)) throw Error(ErrorCode::NotAnIdeal, "subspace is not a Lie ideal");
  if (!center_of(lie, ideal).contains(z)) throw Error(ErrorCode::NotCentralInI, "z is not in Z(I)");
  CPAProduct p(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector zi = bracket(lie, z, unit_vector(n, i));
    for (std::size_t j = i; j < n; ++j) p.set(i, j, bracket(lie, zi, unit_vector(n, j)));
  }
  return p;
}

EigenfunctionalProduct lie_eigenfunctional_product(const LieAlgebra& lie, const Vector& v) {
  require_valid(lie);
  const std::size_t n = lie.dim();
  if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "eigenvector size");
  if (is_zero(v)) throw Error(ErrorCode::NotCommonEigenvector, "zero vector");
  const Subspace line = Subspace::span(n, {v});
  EigenfunctionalProduct out{CPAProduct(n), Vector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const Vector w = bracket(lie, unit_vector(n, i), v);
    if (!line.contains(w))
      throw Error(ErrorCode::NotCommonEigenvector, "[" + lie.labels()[i] + ", v] is not a multiple of v");
    out.lambda[i] = line.coordinates(w)[0] / line.coordinates(v)[0];
  }
  if (!structure_report(lie).solvable) throw Error(ErrorCode::NotSolvable, lie.name() + " is not solvable");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!is_zero(dot(out.lambda, lie.basis_bracket(i, j))))
        throw Error(ErrorCode::InvalidAlgebra, "eigenfunctional does not vanish on [L, L]");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.product.set(i, j, scaled(out.lambda[i] * out.lambda[j], v));
  return out;
}

std::optional<Vector> find_common_eigenvector(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  if (n == 0) return std::nullopt;
  std::vector<Matrix> ads;
  std::vector<std::vector<Rational>> roots;
  for (std::size_t i = 0; i < n; ++i) {
    ads.push_back(adjoint(lie, unit_vector(n, i)));
    std::vector<Rational> r;
    for (const auto& rm : rational_roots(char_poly(ads.back()))) r.push_back(rm.root);
    roots.push_back(std::move(r));
  }
  std::function<std::optional<Vector>(std::size_t, const Subspace&)> search =
      [&](std::size_t i, const Subspace& s) -> std::optional<Vector> {
    if (s.is_zero()) return std::nullopt;
    if (i == n) return s.vector(0);
    for (const auto& mu : roots[i]) {
      auto found = search(i + 1, intersect(s, eigenspace(ads[i], mu)));
      if (found) return found;
    }
    return std::nullopt;
  };
  return search(0, Subspace::full(n));
}

CenterConstruction center_construction(const LieAlgebra& lie) {
  const auto report = structure_report(lie);
  const std::size_t n = lie.dim();
  if (report.perfect) throw Error(ErrorCode::IsPerfect, lie.name() + " is perfect");
  if (report.center.is_zero()) throw Error(ErrorCode::TrivialCenter, lie.name() + " has trivial center");
  const Subspace derived = report.derived_series.size() > 1 ? report.derived_series[1] : report.derived_series[0];
  // Functionals vanishing on [L, L]; nonzero because L is not perfect.
  const Matrix functionals = derived.equations();
  CenterConstruction out;
  const Subspace zd = intersect(report.center, derived);
  if (!zd.is_zero()) {
    out.z = zd.vector(0);
    out.z_in_derived = true;
    out.lambda = functionals.row(0);
  } else {
    // Abelian factor: a central c outside [L, L] and λ with λ(c) = 1.
    for (const auto& c : report.center.vectors()) {
      for (std::size_t r = 0; r < functionals.rows(); ++r) {
        const Rational value = dot(functionals.row(r), c);
        if (is_zero(value)) continue;
        out.z = c;
        out.lambda = scaled(Rational(1 / value), functionals.row(r));
        break;
      }
      if (!out.z.empty()) break;
    }
  }
  out.product = CPAProduct(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.product.set(i, j, scaled(out.lambda[i] * out.lambda[j], out.z));
  return out;
}

CPAProduct center_construction_product(const LieAlgebra& lie) { return center_construction(lie).product; }

std::pair<LieAlgebra, CPAProduct> componentwise_product(const LieAlgebra& l1, const CPAProduct& p1,
                                                         const LieAlgebra& l2, const CPAProduct& p2) {
  require_cpa(l1, p1);
  require_cpa(l2, p2);
  LieAlgebra sum = direct_sum(l1, l2);
  const std::size_t n1 = l1.dim(), n2 = l2.dim();
  CPAProduct p(n1 + n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) p.set_entry(i, j, k, p1.d(i, j, k));
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      for (std::size_t k = 0; k < n2; ++k) p.set_entry(n1 + i, n1 + j, n1 + k, p2.d(i, j, k));
  return {std::move(sum), std::move(p)};
}

}  // namespace cpa
