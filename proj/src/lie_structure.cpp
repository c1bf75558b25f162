#include "cpa/lie_structure.hpp"

#include <random>

#include "cpa/error.hpp"

namespace cpa {

void require_valid(const LieAlgebra& lie) {
  const auto violations = validate(lie);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw Error(ErrorCode::InvalidAlgebra,
                std::string(v.kind == ViolationKind::Antisymmetry ? "antisymmetry" : "Jacobi") + " fails at (" +
                    std::to_string(v.i) + "," + std::to_string(v.j) + "," + std::to_string(v.k) + ")");
  }
}

Subspace bracket_span(const LieAlgebra& lie, const Subspace& a, const Subspace& b) {
  std::vector<Vector> out;
  for (const auto& x : a.vectors())
    for (const auto& y : b.vectors()) out.push_back(bracket(lie, x, y));
  return Subspace::span(lie.dim(), out);
}

Subspace derived_algebra(const LieAlgebra& lie) {
  const auto full = Subspace::full(lie.dim());
  return bracket_span(lie, full, full);
}

Subspace ideal_generated(const LieAlgebra& lie, const Subspace& s) {
  const auto full = Subspace::full(lie.dim());
  Subspace current = s;
  while (true) {
    Subspace next = current + bracket_span(lie, full, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

bool is_ideal(const LieAlgebra& lie, const Subspace& s) {
  return s.contains(bracket_span(lie, Subspace::full(lie.dim()), s));
}

Subspace center(const LieAlgebra& lie) { return center_of(lie, Subspace::full(lie.dim())); }

Subspace center_of(const LieAlgebra& lie, const Subspace& ideal) {
  std::vector<Matrix> blocks{ideal.equations()};
  for (const auto& b : ideal.vectors()) blocks.push_back(adjoint(lie, b));
  return kernel(vstack(blocks));
}

Matrix killing_form(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(adjoint(lie, unit_vector(n, i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = (ads[i] * ads[j]).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

Subspace radical(const LieAlgebra& lie) {
  const Subspace derived = derived_algebra(lie);
  if (derived.is_zero()) return Subspace::full(lie.dim());
  return kernel(derived.basis() * killing_form(lie));
}

namespace {

std::vector<Subspace> series(const LieAlgebra& lie, bool derived) {
  const auto full = Subspace::full(lie.dim());
  std::vector<Subspace> out{full};
  while (true) {
    const Subspace& last = out.back();
    Subspace next = derived ? bracket_span(lie, last, last) : bracket_span(lie, full, last);
    if (next == last) return out;
    out.push_back(std::move(next));
  }
}

}  // namespace

StructReport structure_report(const LieAlgebra& lie) {
  require_valid(lie);
  StructReport r;
  r.derived_series = series(lie, true);
  r.lower_central_series = series(lie, false);
  const auto& ds = r.derived_series;
  const std::size_t n = lie.dim();
  r.solvable = ds.back().is_zero();
  r.nilpotent = r.lower_central_series.back().is_zero();
  r.perfect = ds.size() == 1;  // [L, L] == L
  r.abelian = ds.size() == 1 ? n == 0 : ds[1].is_zero();
  r.metabelian = ds.size() <= 2 ? (ds.back().is_zero() || n == 0) : ds[2].is_zero();
  r.center = center(lie);
  r.radical = radical(lie);
  return r;
}

Subspace derivations(const LieAlgebra& lie) {
  require_valid(lie);
  const std::size_t n = lie.dim();
  // Unknown D(r, c) at column r * n + c. Row per (i < j, m):
  // (D[e_i,e_j])_m - [D e_i, e_j]_m - [e_i, D e_j]_m = 0.
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) {
        Vector row(n * n);
        for (std::size_t l = 0; l < n; ++l) row[m * n + l] += lie.c(i, j, l);
        for (std::size_t r = 0; r < n; ++r) {
          row[r * n + i] -= lie.c(r, j, m);
          row[r * n + j] -= lie.c(i, r, m);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  return kernel(Matrix::from_rows(rows, n * n));
}

Subspace inner_derivations(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  std::vector<Vector> flat;
  for (std::size_t i = 0; i < n; ++i) flat.push_back(adjoint(lie, unit_vector(n, i)).entries());
  return Subspace::span(n * n, flat);
}

std::vector<Matrix> as_matrices(const Subspace& flat, std::size_t n) {
  std::vector<Matrix> out;
  for (const auto& v : flat.vectors()) out.push_back(reshape(v, n, n));
  return out;
}

bool is_complete(const LieAlgebra& lie) {
  return center(lie).is_zero() && derivations(lie) == inner_derivations(lie);
}

std::vector<Subspace> standard_ideals(const LieAlgebra& lie) {
  const auto report = structure_report(lie);
  std::vector<Subspace> candidates{Subspace::zero(lie.dim())};
  candidates.insert(candidates.end(), report.derived_series.begin(), report.derived_series.end());
  candidates.insert(candidates.end(), report.lower_central_series.begin(), report.lower_central_series.end());
  candidates.push_back(report.center);
  candidates.push_back(report.radical);
  std::vector<Subspace> out;
  for (auto& s : candidates) {
    bool seen = false;
    for (const auto& o : out) seen = seen || o == s;
    if (!seen) out.push_back(std::move(s));
  }
  return out;
}

Quotient quotient(const LieAlgebra& lie, const Subspace& ideal) {
  const std::size_t n = lie.dim();
  if (ideal.ambient_dim() != n) throw Error(ErrorCode::DimensionMismatch, "quotient ideal ambient dimension");
  if (!is_ideal(lie, ideal)) throw Error(ErrorCode::NotAnIdeal, "quotient by a subspace that is not an ideal");
  std::vector<bool> pivot(n, false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  Quotient q;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (!pivot[i]) {
      q.complement.push_back(i);
      labels.push_back(lie.labels()[i]);
    }
  }
  const std::size_t m = q.complement.size();
  q.projection = Matrix(m, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector r = ideal.reduce(unit_vector(n, i));
    for (std::size_t a = 0; a < m; ++a) q.projection(a, i) = r[q.complement[a]];
  }
  q.algebra = LieAlgebra(lie.name() + "/I", labels);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      q.algebra.set_bracket(a, b, q.projection * lie.basis_bracket(q.complement[a], q.complement[b]));
  return q;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  auto labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  LieAlgebra sum(a.name() + "+" + b.name(), labels);
  const std::size_t na = a.dim();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) sum.set_constant(i, j, k, a.c(i, j, k));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) sum.set_constant(na + i, na + j, na + k, b.c(i, j, k));
  return sum;
}

LieAlgebra semidirect(const LieAlgebra& base, const std::vector<Matrix>& rep, std::size_t module_dim) {
  const std::size_t n = base.dim();
  if (rep.size() != n) throw Error(ErrorCode::NotARepresentation, "need one matrix per basis element");
  for (const auto& r : rep) {
    if (r.rows() != module_dim || r.cols() != module_dim) throw Error(ErrorCode::NotARepresentation, "matrix size");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix lhs(module_dim, module_dim);
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(base.c(i, j, k))) lhs = lhs + base.c(i, j, k) * rep[k];
      }
      if (!(lhs == rep[i] * rep[j] - rep[j] * rep[i])) {
        throw Error(ErrorCode::NotARepresentation,
                    "rho([e" + std::to_string(i) + ",e" + std::to_string(j) + "]) != [rho, rho]");
      }
    }
  }
  auto labels = base.labels();
  for (std::size_t a = 0; a < module_dim; ++a) labels.push_back("v" + std::to_string(a + 1));
  LieAlgebra out(base.name() + "|x|V" + std::to_string(module_dim), labels);
  const std::size_t total = n + module_dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.set_constant(i, j, k, base.c(i, j, k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < module_dim; ++a) {
      Vector v(total);
      for (std::size_t b = 0; b < module_dim; ++b) v[n + b] = rep[i](b, a);
      out.set_bracket(i, n + a, v);
    }
  }
  return out;
}

FixResult fix_witness_ideal(const LieAlgebra& lie) {
  require_valid(lie);
  const std::size_t n = lie.dim();
  std::vector<Vector> candidates;
  for (std::size_t i = 0; i < n; ++i) candidates.push_back(unit_vector(n, i));
  std::mt19937 rng(0x5EED);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int s = 0; s < 64 && n > 0; ++s) {
    Vector v(n);
    for (auto& x : v) x = coeff(rng);
    candidates.push_back(std::move(v));
  }
  FixResult out;
  std::vector<Vector> xs;
  for (const auto& x : candidates) {
    if (is_zero(x)) continue;
    // [y, x] = -ad(x) y = x
    auto sol = solve_affine(Rational(-1) * adjoint(lie, x), x);
    if (!sol) continue;
    out.witnesses.push_back({x, sol->particular});
    xs.push_back(x);
  }
  out.ideal = ideal_generated(lie, Subspace::span(n, xs));
  return out;
}

}  // namespace cpa
