#include "cpa/inner.hpp"

#include "cpa/error.hpp"
#include "cpa/lie_structure.hpp"
#include "cpa/polynomial.hpp"

namespace cpa {

bool is_homomorphism(const LieAlgebra& lie, const Matrix& phi) {
  const std::size_t n = lie.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (phi * lie.basis_bracket(i, j) != bracket(lie, phi.column(i), phi.column(j))) return false;
  return true;
}

bool is_nilpotent(const Matrix& m) { return m.pow(static_cast<unsigned>(m.rows())).is_zero(); }

std::optional<InnerWitness> detect_inner(const LieAlgebra& lie, const CPAProduct& p) {
  require_cpa(lie, p);
  const std::size_t n = lie.dim();
  // Unknown φ(r, i) at column r * n + i; row per (i, j, m):
  // (L(e_i))(m, j) = Σ_r φ(r, i) c(r, j, m).
  Matrix a(n * n * n, n * n);
  Vector b(n * n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m, ++row) {
        for (std::size_t r = 0; r < n; ++r) a(row, r * n + i) = lie.c(r, j, m);
        b[row] = p.d(i, j, m);
      }
  auto sol = solve_affine(a, b);
  if (!sol) return std::nullopt;
  InnerWitness w;
  w.phi = reshape(sol->particular, n, n);
  w.inner = is_homomorphism(lie, w.phi);
  if (!w.inner && !sol->kernel.is_zero()) {
    // φ is only determined modulo maps into the center; look for a
    // homomorphism in the affine family.
    const auto dirs = sol->kernel.vectors();
    std::vector<Matrix> basis;
    for (const auto& v : dirs) basis.push_back(reshape(v, n, n));
    const std::size_t k = basis.size();
    std::vector<Matrix> all = basis;
    all.push_back(w.phi);
    // Homomorphism residuals of s_1 B_1 + ... + s_k B_k + 1 * φ0, with the
    // last variable pinned to 1 through an extra linear equation.
    auto res = hom_residuals(lie, all);
    MPoly pin = MPoly::variable(k + 1, k) - MPoly::constant(k + 1, 1);
    res.push_back(pin);
    auto r = resolve(res, k + 1);
    if (r.resolved && !r.components.empty()) {
      const Vector s = r.components.front().point();
      Matrix phi = w.phi;
      for (std::size_t c = 0; c < k; ++c)
        if (!is_zero(s[c])) phi = phi + s[c] * basis[c];
      w.phi = phi;
      w.inner = is_homomorphism(lie, phi);
    }
  }
  w.nil_inner = w.inner && is_nilpotent(w.phi);
  return w;
}

Decomposition phi_decompose(const LieAlgebra& lie, const Matrix& phi) {
  const std::size_t n = lie.dim();
  if (phi.rows() != n || phi.cols() != n) throw Error(ErrorCode::DimensionMismatch, "phi size");
  const CPAProduct p = product_from_phi(lie, phi);
  require_cpa(lie, p);
  const auto eig = rational_eigen(phi);
  if (!eig) throw Error(ErrorCode::UnsupportedSpectrum, "phi has non-rational eigenvalues");

  Decomposition out;
  out.n_part = Subspace::zero(n);
  out.h_part = Subspace::zero(n);
  std::vector<std::pair<Rational, Subspace>> spaces;
  for (const auto& [root, mult] : *eig) {
    out.eigenvalues.push_back(root);
    Subspace g = generalized_eigenspace(phi, root);
    if (is_zero(root)) {
      out.n_part = g;
    } else {
      out.h_part = out.h_part + g;
    }
    spaces.emplace_back(root, std::move(g));
  }
  auto& ch = out.checks;
  ch.direct_sum = out.n_part.dim() + out.h_part.dim() == n && intersect(out.n_part, out.h_part).is_zero();

  const Matrix phi_n = phi.pow(static_cast<unsigned>(n));
  bool n_ok = out.n_part.contains(image(phi, out.n_part));
  for (const auto& v : out.n_part.vectors()) n_ok = n_ok && is_zero(phi_n * v);
  ch.n_nilpotent_phi = n_ok;

  const Subspace phi_h = image(phi, out.h_part);
  bool h_ok = out.h_part.contains(phi_h) && phi_h.dim() == out.h_part.dim();
  const auto hv = out.h_part.vectors();
  for (std::size_t a = 0; a < hv.size() && h_ok; ++a)
    for (std::size_t b = a + 1; b < hv.size() && h_ok; ++b)
      h_ok = phi * bracket(lie, hv[a], hv[b]) == bracket(lie, phi * hv[a], phi * hv[b]);
  ch.h_automorphism_phi = h_ok;

  const Subspace hh = bracket_span(lie, out.h_part, out.h_part);
  ch.h_metabelian = bracket_span(lie, hh, hh).is_zero();

  ch.both_ideals = is_ideal(lie, out.n_part) && is_ideal(lie, out.h_part) && is_product_ideal(p, out.n_part) &&
                   is_product_ideal(p, out.h_part);

  bool law = true;
  for (const auto& [alpha, ga] : spaces)
    for (const auto& [beta, gb] : spaces) {
      const Subspace br = bracket_span(lie, ga, gb);
      if (br.is_zero()) continue;
      if (!is_zero(alpha + beta)) law = false;
      Subspace target = Subspace::zero(n);
      for (const auto& [gamma, gc] : spaces)
        if (gamma == alpha * beta) target = gc;
      if (!target.contains(br)) law = false;
    }
  ch.eigen_bracket_law = law;
  return out;
}

}  // namespace cpa
