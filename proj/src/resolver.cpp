#include "cpa/resolver.hpp"

#include <algorithm>

#include "cpa/error.hpp"

namespace cpa {

namespace {

bool is_rational_square(const Rational& x, Rational& root) {
  if (sgn(x) < 0) return false;
  const mpz_class num = x.get_num();
  const mpz_class den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  root = Rational(sqrt(num), sqrt(den));
  root.canonicalize();
  return true;
}

// Affine form row . (1, x_vars...) lifted into the ambient variable count.
MPoly lift_form(const Vector& row, const std::vector<std::uint32_t>& vars, std::size_t nvars) {
  MPoly p(nvars);
  p.add_term({}, row[0]);
  for (std::size_t a = 0; a < vars.size(); ++a) p.add_term({vars[a]}, row[a + 1]);
  return p;
}

}  // namespace

std::optional<std::vector<MPoly>> linear_factors(const MPoly& q) {
  const int deg = q.degree();
  if (deg == 1) return std::vector<MPoly>{q};
  if (deg != 2) return std::nullopt;
  const auto vars = q.variables();
  const std::size_t m = vars.size() + 1;
  auto index = [&](std::uint32_t v) {
    return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()) + 1;
  };
  // Homogenized symmetric form: q(x) = u^T Q u with u = (1, x).
  Matrix sym(m, m);
  for (const auto& [mono, c] : q.terms()) {
    if (mono.empty()) {
      sym(0, 0) += c;
    } else if (mono.size() == 1) {
      const auto a = index(mono[0]);
      sym(0, a) += c / 2;
      sym(a, 0) += c / 2;
    } else if (mono[0] == mono[1]) {
      const auto a = index(mono[0]);
      sym(a, a) += c;
    } else {
      const auto a = index(mono[0]);
      const auto b = index(mono[1]);
      sym(a, b) += c / 2;
      sym(b, a) += c / 2;
    }
  }
  const std::size_t rank = rref(sym).rank;
  std::vector<MPoly> factors;
  MPoly check(q.nvars());
  if (rank == 1) {
    std::size_t i = 0;
    while (i < m && is_zero(sym(i, i))) ++i;
    if (i == m) return std::nullopt;
    MPoly ell = lift_form(sym.row(i), vars, q.nvars());
    check = (1 / sym(i, i)) * (ell * ell);
    factors.push_back(ell);
  } else if (rank == 2) {
    std::size_t fi = m;
    std::size_t fj = m;
    for (std::size_t i = 0; i < m && fi == m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (!is_zero(sym(i, i) * sym(j, j) - sym(i, j) * sym(i, j))) {
          fi = i;
          fj = j;
          break;
        }
      }
    }
    if (fi == m) return std::nullopt;
    const Rational det = sym(fi, fi) * sym(fj, fj) - sym(fi, fj) * sym(fi, fj);
    Rational root;
    if (!is_rational_square(-det, root)) return std::nullopt;
    const MPoly p1 = lift_form(sym.row(fi), vars, q.nvars());
    const MPoly p2 = lift_form(sym.row(fj), vars, q.nvars());
    // (A p1^2 + 2B p1 p2 + C p2^2) / det
    const Rational a = sym(fj, fj);
    const Rational b = -sym(fi, fj);
    const Rational c = sym(fi, fi);
    if (!is_zero(a)) {
      const Rational rho1 = (-b + root) / a;
      const Rational rho2 = (-b - root) / a;
      MPoly l1 = p1 - rho1 * p2;
      MPoly l2 = p1 - rho2 * p2;
      check = (a / det) * (l1 * l2);
      factors.push_back(std::move(l1));
      factors.push_back(std::move(l2));
    } else {
      MPoly l2 = (2 * b) * p1 + c * p2;
      check = (1 / det) * (p2 * l2);
      factors.push_back(p2);
      factors.push_back(std::move(l2));
    }
  } else {
    return std::nullopt;
  }
  if (!(check == q)) throw Error(ErrorCode::InvalidAlgebra, "internal: quadratic factorization mismatch");
  std::vector<MPoly> distinct;
  for (auto& f : factors) {
    if (f.degree() < 1) continue;
    MPoly n = f.normalized();
    if (std::find(distinct.begin(), distinct.end(), n) == distinct.end()) distinct.push_back(std::move(n));
  }
  return distinct;
}

Polynomial to_univariate(const MPoly& p, std::uint32_t var) {
  std::vector<Rational> coeffs;
  for (const auto& [mono, c] : p.terms()) {
    for (auto v : mono) {
      if (v != var) throw Error(ErrorCode::DimensionMismatch, "polynomial is not univariate");
    }
    if (coeffs.size() <= mono.size()) coeffs.resize(mono.size() + 1);
    coeffs[mono.size()] += c;
  }
  return Polynomial(std::move(coeffs));
}

namespace {

// Coefficients of p in powers of variable 1, each a polynomial in variable 0.
std::vector<Polynomial> coefficients_in_second(const MPoly& p) {
  std::vector<std::vector<Rational>> raw;
  for (const auto& [mono, c] : p.terms()) {
    std::size_t e0 = 0;
    std::size_t e1 = 0;
    for (auto v : mono) (v == 0 ? e0 : e1)++;
    if (raw.size() <= e1) raw.resize(e1 + 1);
    if (raw[e1].size() <= e0) raw[e1].resize(e0 + 1);
    raw[e1][e0] += c;
  }
  std::vector<Polynomial> out;
  for (auto& r : raw) out.emplace_back(std::move(r));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(1);
  if (n == 1) return m[0][0];
  Polynomial det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * determinant(std::move(minor));
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace

Polynomial resultant_in_first(const MPoly& p, const MPoly& q) {
  if (p.nvars() != 2 || q.nvars() != 2) throw Error(ErrorCode::DimensionMismatch, "resultant needs two variables");
  const auto a = coefficients_in_second(p);
  const auto b = coefficients_in_second(q);
  if (a.empty() || b.empty()) return {};
  const std::size_t dp = a.size() - 1;
  const std::size_t dq = b.size() - 1;
  if (dp == 0 && dq == 0) return Polynomial::constant(1);
  const std::size_t n = dp + dq;
  std::vector<std::vector<Polynomial>> syl(n, std::vector<Polynomial>(n));
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t k = 0; k <= dp; ++k) syl[r][r + k] = a[dp - k];
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t k = 0; k <= dq; ++k) syl[dq + r][r + k] = b[dq - k];
  return determinant(std::move(syl));
}

namespace {

class Resolver {
 public:
  Resolver(const std::vector<MPoly>& polys, const ResolveOptions& options) : polys_(polys), options_(options) {}

  bool run(const AffineSpace& space) {
    if (++nodes_ > options_.max_nodes) return fail("search budget exhausted");
    const std::size_t k = space.dim();
    const auto dirs = space.directions().vectors();
    std::vector<MPoly> local;
    for (const auto& p : polys_) {
      MPoly s = p.substitute(space.point(), dirs);
      if (s.is_zero()) continue;
      if (s.degree() == 0) return true;  // inconsistent: empty branch
      local.push_back(std::move(s));
    }
    if (local.empty()) {
      components_.push_back(space);
      return true;
    }

    std::vector<Vector> rows;
    Vector rhs;
    for (const auto& p : local) {
      if (p.degree() == 1) {
        rows.push_back(p.linear_part());
        rhs.push_back(-p.constant_term());
      }
    }
    if (!rows.empty()) {
      auto next = restrict_local(space, Matrix::from_rows(rows, k), rhs);
      return next ? run(*next) : true;
    }

    if (k == 1) return branch_univariate(space, local);

    std::optional<std::vector<MPoly>> best;
    std::size_t best_vars = 0;
    for (const auto& p : local) {
      auto f = linear_factors(p);
      if (!f) continue;
      const std::size_t nv = p.variables().size();
      if (!best || nv < best_vars || (nv == best_vars && f->size() < best->size())) {
        best = std::move(f);
        best_vars = nv;
      }
    }
    if (best) {
      for (const auto& factor : *best) {
        auto next = restrict_local(space, Matrix::from_rows({factor.linear_part()}, k), {-factor.constant_term()});
        if (next && !run(*next)) return false;
      }
      return true;
    }

    if (k == 2) return branch_resultant(space, local);
    return fail("quadratic residuals in " + std::to_string(k) + " parameters do not split into rational linear factors");
  }

  std::vector<AffineSpace> components() const {
    std::vector<AffineSpace> maximal;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < components_.size() && !dominated; ++j) {
        if (i == j) continue;
        const bool contains = components_[j].contains(components_[i]);
        // Equal components: keep the first occurrence only.
        dominated = contains && (!components_[i].contains(components_[j]) || j < i);
      }
      if (!dominated) maximal.push_back(components_[i]);
    }
    std::sort(maximal.begin(), maximal.end(), [](const AffineSpace& a, const AffineSpace& b) {
      if (a.dim() != b.dim()) return a.dim() > b.dim();
      if (a.point() != b.point()) return a.point() < b.point();
      return a.directions().basis().entries() < b.directions().basis().entries();
    });
    return maximal;
  }

  const std::string& reason() const { return reason_; }

 private:
  bool fail(std::string why) {
    if (reason_.empty()) reason_ = std::move(why);
    return false;
  }

  // Restrict by equations a s = b written in the local parameters s.
  std::optional<AffineSpace> restrict_local(const AffineSpace& space, const Matrix& a, const Vector& b) const {
    auto sol = solve_affine(a, b);
    if (!sol) return std::nullopt;
    const std::size_t n = space.ambient_dim();
    const Matrix dt = Matrix::from_columns(space.directions().vectors(), n);
    Vector point = add(space.point(), dt * sol->particular);
    std::vector<Vector> dirs;
    for (const auto& v : sol->kernel.vectors()) dirs.push_back(dt * v);
    return AffineSpace(std::move(point), Subspace::span(n, dirs));
  }

  bool branch_on_roots(const AffineSpace& space, const Polynomial& p, std::uint32_t var) {
    const Polynomial sf = square_free_part(p);
    if (sf.degree() <= 0) return true;  // nonzero constant: no common zero
    const auto roots = rational_roots(sf);
    if (static_cast<int>(roots.size()) != sf.degree()) {
      return fail("univariate residual " + sf.to_string() + " has non-rational roots");
    }
    const std::size_t k = space.dim();
    for (const auto& r : roots) {
      Matrix a(1, k);
      a(0, var) = 1;
      auto next = restrict_local(space, a, {r.root});
      if (next && !run(*next)) return false;
    }
    return true;
  }

  bool branch_univariate(const AffineSpace& space, const std::vector<MPoly>& local) {
    Polynomial g;
    for (const auto& p : local) g = gcd(g, to_univariate(p, 0));
    return branch_on_roots(space, g, 0);
  }

  bool branch_resultant(const AffineSpace& space, const std::vector<MPoly>& local) {
    // A polynomial free of one variable pins the other directly.
    for (const auto& p : local) {
      const auto vars = p.variables();
      if (vars.size() == 1) {
        Polynomial g;
        for (const auto& q : local) {
          if (q.variables() == vars) g = gcd(g, to_univariate(q, vars[0]));
        }
        return branch_on_roots(space, g, vars[0]);
      }
    }
    for (std::size_t i = 0; i < local.size(); ++i) {
      for (std::size_t j = i + 1; j < local.size(); ++j) {
        const Polynomial res = resultant_in_first(local[i], local[j]);
        if (!res.is_zero()) return branch_on_roots(space, res, 0);
      }
    }
    return fail("residual curve in 2 parameters does not split into rational lines");
  }

  const std::vector<MPoly>& polys_;
  ResolveOptions options_;
  std::vector<AffineSpace> components_;
  std::size_t nodes_ = 0;
  std::string reason_;
};

}  // namespace

Resolution resolve(const std::vector<MPoly>& polys, std::size_t nvars, const ResolveOptions& options) {
  for (const auto& p : polys) {
    if (p.nvars() != nvars) throw Error(ErrorCode::DimensionMismatch, "resolve: polynomial variable count");
    if (p.degree() > 2) throw Error(ErrorCode::DimensionMismatch, "resolve: degree above 2");
  }
  Resolver resolver(polys, options);
  Resolution out;
  out.resolved = resolver.run(AffineSpace::whole(nvars));
  if (out.resolved) {
    out.components = resolver.components();
  } else {
    out.reason = resolver.reason();
  }
  return out;
}

}  // namespace cpa
