#include "cpa/classify.hpp"

#include <set>

#include "cpa/error.hpp"
#include "cpa/lie_structure.hpp"

namespace cpa {

namespace {

Monomial mono(std::size_t a) { return {static_cast<std::uint32_t>(a)}; }

Monomial mono(std::size_t a, std::size_t b) {
  return a <= b ? Monomial{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)}
                : Monomial{static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(a)};
}

std::vector<MPoly> distinct_normalized(const std::vector<MPoly>& polys) {
  std::vector<MPoly> out;
  std::set<std::string> seen;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    MPoly q = p.normalized();
    if (seen.insert(q.to_string()).second) out.push_back(std::move(q));
  }
  return out;
}

// Bracket-action residual polynomials. Entry (i, j, k) for i < j (or all
// ordered pairs when `all_pairs`), output coordinate m.
std::vector<MPoly> bracket_action_polys(const LieAlgebra& lie, const std::vector<CPAProduct>& basis, bool all_pairs) {
  const std::size_t n = lie.dim(), d = basis.size();
  std::vector<std::vector<Matrix>> left(d, std::vector<Matrix>(n));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t i = 0; i < n; ++i) left[a][i] = basis[a].left_basis(i);
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = all_pairs ? 0 : i + 1; j < n; ++j) {
      if (i == j) continue;
      // [e_i,e_j]·e_k - e_i·(e_j·e_k) + e_j·(e_i·e_k), as n x n blocks (row m, column k).
      std::vector<MPoly> block(n * n, MPoly(d));
      const Vector br = lie.basis_bracket(i, j);
      for (std::size_t a = 0; a < d; ++a) {
        const Matrix lin = basis[a].left(br);
        for (std::size_t m = 0; m < n; ++m)
          for (std::size_t k = 0; k < n; ++k)
            if (!is_zero(lin(m, k))) block[m * n + k].add_term(mono(a), lin(m, k));
      }
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          const Matrix q = left[a][j] * left[b][i] - left[a][i] * left[b][j];
          if (q.is_zero()) continue;
          for (std::size_t m = 0; m < n; ++m)
            for (std::size_t k = 0; k < n; ++k)
              if (!is_zero(q(m, k))) block[m * n + k].add_term(mono(a, b), q(m, k));
        }
      }
      // Order: (i, j, k, m).
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m)
          if (!block[m * n + k].is_zero()) out.push_back(std::move(block[m * n + k]));
    }
  }
  return out;
}

}  // namespace

std::vector<CPAProduct> solve_linear_part(const LieAlgebra& lie) {
  require_valid(lie);
  const std::size_t n = lie.dim();
  const auto ders = as_matrices(derivations(lie), n);
  const std::size_t m = ders.size();
  // Unknown t(i, a) at column i * m + a: L(e_i) = Σ_a t(i,a) D_a.
  // Commutativity: column j of L(e_i) equals column i of L(e_j).
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t r = 0; r < n; ++r) {
        Vector row(n * m);
        for (std::size_t a = 0; a < m; ++a) {
          row[i * m + a] += ders[a](r, j);
          row[j * m + a] -= ders[a](r, i);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  const Subspace sol = kernel(Matrix::from_rows(rows, n * m));
  std::vector<Vector> flats;
  for (const auto& t : sol.vectors()) {
    CPAProduct p(n);
    for (std::size_t i = 0; i < n; ++i) {
      Matrix li(n, n);
      for (std::size_t a = 0; a < m; ++a)
        if (!is_zero(t[i * m + a])) li = li + t[i * m + a] * ders[a];
      for (std::size_t j = i; j < n; ++j) p.set(i, j, li.column(j));
    }
    flats.push_back(p.flatten());
  }
  std::vector<CPAProduct> out;
  for (const auto& v : Subspace::span(CPAProduct::flat_size(n), flats).vectors())
    out.push_back(CPAProduct::unflatten(n, v));
  return out;
}

CPAProduct combine(const std::vector<CPAProduct>& basis, const Vector& t) {
  if (basis.size() != t.size()) throw Error(ErrorCode::DimensionMismatch, "parameter count");
  if (basis.empty()) throw Error(ErrorCode::DimensionMismatch, "combine needs a dimension");
  CPAProduct out(basis.front().dim());
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (!is_zero(t[a])) out = out + t[a] * basis[a];
  return out;
}

std::vector<MPoly> quadratic_residuals(const LieAlgebra& lie, const std::vector<CPAProduct>& basis) {
  return bracket_action_polys(lie, basis, false);
}

std::vector<MPoly> family_axiom_residuals(const LieAlgebra& lie, const std::vector<CPAProduct>& basis) {
  const std::size_t n = lie.dim(), d = basis.size();
  std::vector<MPoly> out;
  for (std::size_t a = 0; a < d; ++a) {
    const auto& p = basis[a];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector diff = sub(p.basis_product(i, j), p.basis_product(j, i));
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(diff[k])) {
            MPoly q(d);
            q.add_term(mono(a), diff[k]);
            out.push_back(q);
          }
      }
  }
  std::vector<Matrix> ad(n);
  for (std::size_t i = 0; i < n; ++i) ad[i] = adjoint(lie, unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<MPoly> block(n * n, MPoly(d));
      for (std::size_t a = 0; a < d; ++a) {
        const Matrix li = basis[a].left_basis(i);
        const Matrix r = li * ad[j] - ad[j] * li - adjoint(lie, basis[a].basis_product(i, j));
        for (std::size_t m = 0; m < n; ++m)
          for (std::size_t k = 0; k < n; ++k)
            if (!is_zero(r(m, k))) block[m * n + k].add_term(mono(a), r(m, k));
      }
      for (auto& q : block)
        if (!q.is_zero()) out.push_back(std::move(q));
    }
  }
  auto quad = bracket_action_polys(lie, basis, true);
  out.insert(out.end(), quad.begin(), quad.end());
  return out;
}

std::vector<Matrix> weakly_inner_phi_basis(const LieAlgebra& lie) {
  require_valid(lie);
  const std::size_t n = lie.dim();
  // Unknown φ(r, c) at column r * n + c.
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        Vector row(n * n);
        for (std::size_t r = 0; r < n; ++r) {
          row[r * n + i] += lie.c(r, j, m);
          row[r * n + j] -= lie.c(r, i, m);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  return as_matrices(kernel(Matrix::from_rows(rows, n * n)), n);
}

std::vector<MPoly> hom_residuals(const LieAlgebra& lie, const std::vector<Matrix>& phi_basis) {
  const std::size_t n = lie.dim(), d = phi_basis.size();
  std::vector<std::vector<Vector>> images(d, std::vector<Vector>(n));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t i = 0; i < n; ++i) images[a][i] = phi_basis[a].column(i);
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<MPoly> coords(n, MPoly(d));
      const Vector br = lie.basis_bracket(i, j);
      for (std::size_t a = 0; a < d; ++a) {
        const Vector lin = phi_basis[a] * br;
        for (std::size_t m = 0; m < n; ++m)
          if (!is_zero(lin[m])) coords[m].add_term(mono(a), lin[m]);
      }
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          if (is_zero(images[a][i]) || is_zero(images[b][j])) continue;
          const Vector q = bracket(lie, images[a][i], images[b][j]);
          for (std::size_t m = 0; m < n; ++m)
            if (!is_zero(q[m])) coords[m].add_term(mono(a, b), -q[m]);
        }
      for (auto& q : coords)
        if (!q.is_zero()) out.push_back(std::move(q));
    }
  }
  return out;
}

CPAProduct product_from_phi(const LieAlgebra& lie, const Matrix& phi) {
  const std::size_t n = lie.dim();
  if (phi.rows() != n || phi.cols() != n) throw Error(ErrorCode::DimensionMismatch, "phi size");
  std::vector<Vector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = phi.column(i);
  CPAProduct p(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vector v = bracket(lie, images[i], unit_vector(n, j));
      if (j != i && v != bracket(lie, images[j], unit_vector(n, i)))
        throw Error(ErrorCode::NotACPA, "[phi x, y] is not symmetric in x and y");
      p.set(i, j, v);
    }
  }
  return p;
}

std::string to_string(ClassificationKind kind) {
  switch (kind) {
    case ClassificationKind::Trivial: return "Trivial";
    case ClassificationKind::FullLinearSpace: return "FullLinearSpace";
    case ClassificationKind::ComponentUnion: return "ComponentUnion";
    case ClassificationKind::Unresolved: return "Unresolved";
  }
  return "?";
}

std::string to_string(Method method) { return method == Method::General ? "general" : "inner"; }

std::optional<std::size_t> Classification::variety_dim() const {
  switch (kind) {
    case ClassificationKind::Trivial: return 0;
    case ClassificationKind::FullLinearSpace: return parameter_count();
    case ClassificationKind::ComponentUnion: {
      std::size_t best = 0;
      for (const auto& c : components) best = std::max(best, c.dim());
      return best;
    }
    case ClassificationKind::Unresolved: return std::nullopt;
  }
  return std::nullopt;
}

CPAProduct Classification::product_at(const Vector& t) const {
  if (linear_basis.empty()) throw Error(ErrorCode::DimensionMismatch, "classification has no parameters");
  return combine(linear_basis, t);
}

Matrix Classification::phi_at(const Vector& t) const {
  if (phi_basis.empty() || t.size() != phi_basis.size())
    throw Error(ErrorCode::DimensionMismatch, "classification has no matching phi parameters");
  Matrix out(phi_basis.front().rows(), phi_basis.front().cols());
  for (std::size_t a = 0; a < t.size(); ++a)
    if (!is_zero(t[a])) out = out + t[a] * phi_basis[a];
  return out;
}

namespace {

void finish(Classification& c, std::size_t d, const std::vector<MPoly>& raw, const ResolveOptions& options) {
  c.residuals = distinct_normalized(raw);
  if (d == 0) {
    c.kind = ClassificationKind::Trivial;
    return;
  }
  if (c.residuals.empty()) {
    c.kind = ClassificationKind::FullLinearSpace;
    c.components = {AffineSpace::whole(d)};
    return;
  }
  Resolution r = resolve(c.residuals, d, options);
  if (!r.resolved) {
    c.kind = ClassificationKind::Unresolved;
    c.unresolved_reason = r.reason;
    return;
  }
  c.components = std::move(r.components);
  const bool only_origin = c.components.size() == 1 && c.components[0] == AffineSpace::origin(d);
  c.kind = only_origin ? ClassificationKind::Trivial : ClassificationKind::ComponentUnion;
}

}  // namespace

InnerSolveResult inner_solve(const LieAlgebra& lie, const ResolveOptions& options) {
  require_valid(lie);
  if (!is_complete(lie)) throw Error(ErrorCode::NotComplete, lie.name() + " is not complete");
  InnerSolveResult out;
  out.phi_basis = weakly_inner_phi_basis(lie);
  out.hom_residuals = hom_residuals(lie, out.phi_basis);
  auto& c = out.classification;
  c.method = Method::Inner;
  c.phi_basis = out.phi_basis;
  for (const auto& phi : out.phi_basis) c.linear_basis.push_back(product_from_phi(lie, phi));
  finish(c, out.phi_basis.size(), out.hom_residuals, options);
  return out;
}

Classification classify(const LieAlgebra& lie, Method method, const ResolveOptions& options) {
  if (method == Method::Inner) return inner_solve(lie, options).classification;
  Classification c;
  c.method = Method::General;
  c.linear_basis = solve_linear_part(lie);
  finish(c, c.linear_basis.size(), quadratic_residuals(lie, c.linear_basis), options);
  return c;
}

bool component_sound(const LieAlgebra& lie, const Classification& c, const AffineSpace& component) {
  if (c.linear_basis.empty()) return component.ambient_dim() == 0;
  const auto dirs = component.directions().vectors();
  for (const auto& r : family_axiom_residuals(lie, c.linear_basis))
    if (!r.substitute(component.point(), dirs).is_zero()) return false;
  if (!verify_cpa(lie, c.product_at(component.point())).ok()) return false;
  for (const auto& v : dirs)
    if (!verify_cpa(lie, c.product_at(add(component.point(), v))).ok()) return false;
  return true;
}

}  // namespace cpa
