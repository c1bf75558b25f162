#include "cpa/polynomial.hpp"

#include <algorithm>
#include <set>

#include "cpa/error.hpp"

namespace cpa {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && cpa::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear_factor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& m) const {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "polynomial evaluated at a non-square matrix");
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> c = coeffs_;
  const Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DimensionMismatch, "polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (int k = degree(); k >= dd; --k) {
    const Rational q = rem[static_cast<std::size_t>(k)] / divisor.leading();
    quot[static_cast<std::size_t>(k - dd)] = q;
    if (cpa::is_zero(q)) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (cpa::is_zero(c)) continue;
    const bool neg = sgn(c) < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || k == 0) out += cpa::to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  const Polynomial g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

unsigned multiplicity_of(Polynomial p, const Rational& root) {
  unsigned m = 0;
  const Polynomial factor = Polynomial::linear_factor(root);
  while (!p.is_zero() && is_zero(p(root))) {
    p = p.divmod(factor).first;
    ++m;
  }
  return m;
}

}  // namespace

std::vector<RootMultiplicity> rational_roots(const Polynomial& p) {
  std::vector<RootMultiplicity> out;
  if (p.degree() <= 0) return out;
  Polynomial sf = square_free_part(p);
  std::set<Rational> roots;
  if (is_zero(sf.coefficient(0))) {
    roots.insert(Rational(0));
    sf = sf.divmod(Polynomial::linear_factor(0)).first;
  }
  if (sf.degree() >= 1) {
    // Clear denominators to get integer coefficients.
    mpz_class lcm_den = 1;
    for (const auto& c : sf.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    const mpz_class a0 = Rational(sf.coefficient(0) * lcm_den).get_num();
    const mpz_class an = Rational(sf.leading() * lcm_den).get_num();
    const auto num_divs = positive_divisors(a0);
    const auto den_divs = positive_divisors(an);
    for (const auto& q : den_divs) {
      for (const auto& pnum : num_divs) {
        for (int sign : {1, -1}) {
          Rational cand(mpz_class(pnum * sign), q);
          cand.canonicalize();
          if (roots.count(cand)) continue;
          if (is_zero(sf(cand))) roots.insert(cand);
        }
      }
    }
  }
  for (const auto& r : roots) out.push_back({r, multiplicity_of(p, r)});
  return out;
}

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "char_poly");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -(m * mk).trace() / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

std::optional<std::vector<RootMultiplicity>> rational_eigen(const Matrix& m) {
  const Polynomial cp = char_poly(m);
  auto roots = rational_roots(cp);
  unsigned total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  if (total != m.rows()) return std::nullopt;
  return roots;
}

static Matrix shifted(const Matrix& m, const Rational& lambda) {
  Matrix s = m;
  for (std::size_t i = 0; i < m.rows(); ++i) s(i, i) -= lambda;
  return s;
}

Subspace generalized_eigenspace(const Matrix& m, const Rational& lambda) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "generalized_eigenspace");
  if (!is_zero(char_poly(m)(lambda))) {
    throw Error(ErrorCode::NotAnEigenvalue, to_string(lambda) + " is not a root of the characteristic polynomial");
  }
  return kernel(shifted(m, lambda).pow(static_cast<unsigned>(m.rows())));
}

Subspace eigenspace(const Matrix& m, const Rational& lambda) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "eigenspace");
  return kernel(shifted(m, lambda));
}

}  // namespace cpa
