#include "cpa/cpa_product.hpp"

#include "cpa/error.hpp"
#include "cpa/lie_structure.hpp"

namespace cpa {

CPAProduct::CPAProduct(std::size_t dim) : dim_(dim), d_(dim * dim * dim) {}

void CPAProduct::set_entry(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  d_[(i * dim_ + j) * dim_ + k] = value;
  d_[(j * dim_ + i) * dim_ + k] = value;
}

void CPAProduct::set(std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "product value size");
  for (std::size_t k = 0; k < dim_; ++k) set_entry(i, j, k, value[k]);
}

Vector CPAProduct::basis_product(std::size_t i, std::size_t j) const {
  return Vector(d_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_),
                d_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j + 1) * dim_));
}

Vector CPAProduct::operator()(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "product arguments");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (cpa::is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (cpa::is_zero(y[j])) continue;
      const Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& c = d(i, j, k);
        if (!cpa::is_zero(c)) out[k] += s * c;
      }
    }
  }
  return out;
}

Matrix CPAProduct::left(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (cpa::is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) += x[i] * d(i, j, k);
  }
  return m;
}

Matrix CPAProduct::left_basis(std::size_t i) const { return left(unit_vector(dim_, i)); }

bool CPAProduct::is_zero() const {
  for (const auto& c : d_)
    if (!cpa::is_zero(c)) return false;
  return true;
}

Vector CPAProduct::flatten() const {
  Vector out;
  out.reserve(flat_size(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) out.push_back(d(i, j, k));
  return out;
}

CPAProduct CPAProduct::unflatten(std::size_t dim, const Vector& flat) {
  if (flat.size() != flat_size(dim)) throw Error(ErrorCode::DimensionMismatch, "flattened product size");
  CPAProduct p(dim);
  std::size_t at = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) p.set_entry(i, j, k, flat[at++]);
  return p;
}

CPAProduct operator+(const CPAProduct& a, const CPAProduct& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::DimensionMismatch, "product sum");
  CPAProduct out = a;
  for (std::size_t i = 0; i < out.d_.size(); ++i) out.d_[i] += b.d_[i];
  return out;
}

CPAProduct operator-(const CPAProduct& a, const CPAProduct& b) { return a + Rational(-1) * b; }

CPAProduct operator*(const Rational& s, const CPAProduct& p) {
  CPAProduct out = p;
  for (auto& c : out.d_) c *= s;
  return out;
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::Commutativity: return "commutativity";
    case Axiom::BracketAction: return "bracket_action";
    case Axiom::Derivation: return "derivation";
  }
  return "?";
}

AxiomReport verify_cpa(const LieAlgebra& lie, const CPAProduct& p) {
  const std::size_t n = lie.dim();
  if (p.dim() != n) throw Error(ErrorCode::DimensionMismatch, "product and algebra dimensions differ");
  AxiomReport report;
  auto record = [&](Axiom axiom, std::size_t x, std::size_t y, std::size_t z, Vector residual) {
    if (!report.first_violation) report.first_violation = AxiomViolation{axiom, x, y, z, std::move(residual)};
  };
  for (std::size_t i = 0; i < n && report.commutativity_ok; ++i)
    for (std::size_t j = i + 1; j < n && report.commutativity_ok; ++j) {
      Vector r = sub(p.basis_product(i, j), p.basis_product(j, i));
      if (!is_zero(r)) {
        report.commutativity_ok = false;
        record(Axiom::Commutativity, i, j, 0, std::move(r));
      }
    }

  std::vector<Matrix> left(n), ad(n);
  for (std::size_t i = 0; i < n; ++i) {
    left[i] = p.left_basis(i);
    ad[i] = adjoint(lie, unit_vector(n, i));
  }
  // Bracket action: L([e_i, e_j]) = [L(e_i), L(e_j)] column by column.
  for (std::size_t i = 0; i < n && report.bracket_action_ok; ++i) {
    for (std::size_t j = 0; j < n && report.bracket_action_ok; ++j) {
      const Matrix lhs = p.left(lie.basis_bracket(i, j));
      const Matrix rhs = left[i] * left[j] - left[j] * left[i];
      if (lhs == rhs) continue;
      for (std::size_t k = 0; k < n; ++k) {
        Vector r = sub(lhs.column(k), rhs.column(k));
        if (!is_zero(r)) {
          report.bracket_action_ok = false;
          record(Axiom::BracketAction, i, j, k, std::move(r));
          break;
        }
      }
    }
  }
  // Derivation: L(e_i) ad(e_j) - ad(e_j) L(e_i) = ad(e_i · e_j).
  for (std::size_t i = 0; i < n && report.derivation_ok; ++i) {
    for (std::size_t j = 0; j < n && report.derivation_ok; ++j) {
      const Matrix lhs = left[i] * ad[j] - ad[j] * left[i];
      const Matrix rhs = adjoint(lie, p.basis_product(i, j));
      if (lhs == rhs) continue;
      for (std::size_t k = 0; k < n; ++k) {
        Vector r = sub(lhs.column(k), rhs.column(k));
        if (!is_zero(r)) {
          report.derivation_ok = false;
          record(Axiom::Derivation, i, j, k, std::move(r));
          break;
        }
      }
    }
  }
  return report;
}

void require_cpa(const LieAlgebra& lie, const CPAProduct& p) {
  const auto report = verify_cpa(lie, p);
  if (!report.ok()) {
    const auto& v = *report.first_violation;
    throw Error(ErrorCode::NotACPA, to_string(v.axiom) + " fails at (" + std::to_string(v.x) + ", " +
                                        std::to_string(v.y) + ", " + std::to_string(v.z) + ")");
  }
}

namespace {

// {x : x · e_j ∈ target for all j}
Subspace preimage_under_products(const CPAProduct& p, const Subspace& target) {
  const std::size_t n = p.dim();
  const Matrix eq = target.equations();
  if (eq.rows() == 0) return Subspace::full(n);
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < n; ++j) blocks.push_back(eq * p.left_basis(j));
  return kernel(vstack(blocks));
}

}  // namespace

Subspace annihilator(const CPAProduct& p) { return preimage_under_products(p, Subspace::zero(p.dim())); }

Subspace bracket_power(const LieAlgebra& lie, const Subspace& ideal, std::size_t k) {
  Subspace out = ideal;
  for (std::size_t step = 1; step < k; ++step) out = bracket_span(lie, ideal, out);
  return out;
}

bool is_product_ideal(const CPAProduct& p, const Subspace& s) {
  for (const auto& x : s.vectors())
    for (std::size_t j = 0; j < p.dim(); ++j)
      if (!s.contains(p(x, unit_vector(p.dim(), j)))) return false;
  return true;
}

bool annihilates(const CPAProduct& p, const Subspace& s) {
  for (const auto& x : s.vectors())
    if (!p.left(x).is_zero()) return false;
  return true;
}

QuotientCPA quotient_cpa(const LieAlgebra& lie, const CPAProduct& p, const Subspace& ideal) {
  if (p.dim() != lie.dim() || ideal.ambient_dim() != lie.dim())
    throw Error(ErrorCode::DimensionMismatch, "quotient_cpa dimensions");
  if (!is_ideal(lie, ideal) || !is_product_ideal(p, ideal))
    throw Error(ErrorCode::NotATwoSidedIdeal, "subspace is not an ideal for both bracket and product");
  Quotient q = quotient(lie, ideal);
  const std::size_t m = q.complement.size();
  CPAProduct prod(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) prod.set(a, b, q.projection * p.basis_product(q.complement[a], q.complement[b]));
  return {std::move(q.algebra), std::move(prod), std::move(q.projection)};
}

bool is_nondegenerate(const CPAProduct& p) { return annihilator(p).is_zero(); }

ChainResult ideal_chain(const LieAlgebra& lie, const CPAProduct& p) {
  require_cpa(lie, p);
  const std::size_t n = lie.dim();
  ChainResult out;
  out.chain.push_back(Subspace::zero(n));
  while (true) {
    Subspace next = preimage_under_products(p, out.chain.back());
    if (next == out.chain.back()) break;
    out.chain.push_back(std::move(next));
  }
  out.i_infinity = out.chain.back();
  out.k_stable = out.chain.size() - 1;
  out.nondegenerate = is_nondegenerate(quotient_cpa(lie, p, out.i_infinity).product);
  const Subspace ann = n == 0 ? Subspace::zero(0) : (out.chain.size() > 1 ? out.chain[1] : out.chain[0]);
  Subspace power = out.i_infinity;
  for (std::size_t k = 1; k <= n + 1; ++k) {
    if (ann.contains(power)) {
      out.nilpotency_index = k;
      break;
    }
    power = bracket_span(lie, out.i_infinity, power);
  }
  return out;
}

bool is_associative(const CPAProduct& p) {
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector lhs = p(p.basis_product(i, j), unit_vector(n, k));
        const Vector rhs = p(unit_vector(n, i), p.basis_product(j, k));
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace cpa
