#include "cpa/mpoly.hpp"

#include <algorithm>
#include <set>

#include "cpa/error.hpp"

namespace cpa {

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term({}, c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  MPoly p(nvars);
  p.add_term({static_cast<std::uint32_t>(i)}, Rational(1));
  return p;
}

MPoly MPoly::affine(const Vector& coeffs, const Rational& c) {
  MPoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term({static_cast<std::uint32_t>(i)}, coeffs[i]);
  p.add_term({}, c);
  return p;
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

Rational MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Vector MPoly::linear_part() const {
  Vector v(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.size() == 1) v[m[0]] = c;
  }
  return v;
}

std::vector<std::uint32_t> MPoly::variables() const {
  std::set<std::uint32_t> vars;
  for (const auto& [m, c] : terms_) vars.insert(m.begin(), m.end());
  return {vars.begin(), vars.end()};
}

void MPoly::add_term(Monomial m, const Rational& c) {
  if (cpa::is_zero(c)) return;
  std::sort(m.begin(), m.end());
  for (auto v : m) {
    if (v >= nvars_) throw Error(ErrorCode::DimensionMismatch, "monomial variable out of range");
  }
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (cpa::is_zero(it->second)) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& other) {
  if (other.nvars_ != nvars_) throw Error(ErrorCode::DimensionMismatch, "polynomial variable count");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  if (other.nvars_ != nvars_) throw Error(ErrorCode::DimensionMismatch, "polynomial variable count");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::DimensionMismatch, "polynomial variable count");
  MPoly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add_term(std::move(m), ca * cb);
    }
  }
  return r;
}

MPoly operator*(const Rational& s, const MPoly& p) {
  MPoly r(p.nvars_);
  if (is_zero(s)) return r;
  for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, s * c);
  return r;
}

Rational MPoly::evaluate(const Vector& point) const {
  if (point.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "polynomial evaluation point");
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (auto v : m) term *= point[v];
    total += term;
  }
  return total;
}

MPoly MPoly::substitute(const Vector& point, const std::vector<Vector>& directions) const {
  if (point.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "substitution point");
  const std::size_t k = directions.size();
  std::vector<MPoly> images;
  images.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    Vector coeffs(k);
    for (std::size_t j = 0; j < k; ++j) coeffs[j] = directions[j][i];
    images.push_back(MPoly::affine(coeffs, point[i]));
  }
  MPoly out(k);
  for (const auto& [m, c] : terms_) {
    MPoly term = MPoly::constant(k, c);
    for (auto v : m) term = term * images[v];
    out += term;
  }
  return out;
}

namespace {

// Print order: higher degree first, then lexicographic on variable indices.
std::vector<std::pair<Monomial, Rational>> ordered_terms(const std::map<Monomial, Rational>& terms) {
  std::vector<std::pair<Monomial, Rational>> out(terms.begin(), terms.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
  return out;
}

}  // namespace

MPoly MPoly::normalized() const {
  if (is_zero()) return *this;
  const Rational lead = ordered_terms(terms_).front().second;
  return (1 / lead) * (*this);
}

std::vector<std::string> default_parameter_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("t" + std::to_string(i + 1));
  return names;
}

std::string MPoly::monomial_key(const Monomial& m, const std::vector<std::string>& names) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += "*";
    out += m[i] < names.size() ? names[m[i]] : "t" + std::to_string(m[i] + 1);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : ordered_terms(terms_)) {
    const bool neg = sgn(c) < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (m.empty()) {
      out += cpa::to_string(mag);
    } else {
      if (mag != 1) out += cpa::to_string(mag) + "*";
      out += monomial_key(m, names);
    }
  }
  return out;
}

AffineSpace::AffineSpace(Vector point, Subspace directions)
    : point_(directions.reduce(point)), directions_(std::move(directions)) {}

AffineSpace AffineSpace::whole(std::size_t n) { return AffineSpace(Vector(n), Subspace::full(n)); }

AffineSpace AffineSpace::origin(std::size_t n) { return AffineSpace(Vector(n), Subspace::zero(n)); }

bool AffineSpace::contains(const Vector& v) const { return directions_.contains(sub(v, point_)); }

bool AffineSpace::contains(const AffineSpace& other) const {
  return directions_.contains(other.directions_) && contains(other.point_);
}

Vector AffineSpace::at(const Vector& s) const {
  if (s.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "affine parameter count");
  Vector v = point_;
  for (std::size_t j = 0; j < dim(); ++j) axpy(v, s[j], directions_.vector(j));
  return v;
}

std::pair<Matrix, Vector> AffineSpace::equations() const {
  Matrix a = directions_.equations();
  return {a, a * point_};
}

std::optional<AffineSpace> AffineSpace::restrict_to(const Matrix& a, const Vector& b) const {
  // Solve a (point + D^T s) = b for s.
  const Matrix dt = Matrix::from_columns(directions_.vectors(), ambient_dim());
  auto sol = solve_affine(a * dt, sub(b, a * point_));
  if (!sol) return std::nullopt;
  Vector p = add(point_, dt * sol->particular);
  std::vector<Vector> dirs;
  for (const auto& k : sol->kernel.vectors()) dirs.push_back(dt * k);
  return AffineSpace(std::move(p), Subspace::span(ambient_dim(), dirs));
}

}  // namespace cpa
