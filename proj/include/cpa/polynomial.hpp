#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpa/linalg.hpp"

namespace cpa {

/// Univariate polynomial with rational coefficients, ascending degree.
/// Trailing zero coefficients are stripped, so the zero polynomial has no
/// coefficients at all.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// t - root
  static Polynomial linear_factor(const Rational& root);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  Rational operator()(const Rational& t) const;
  /// p(m) by Horner's scheme; m must be square.
  Matrix operator()(const Matrix& m) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Euclidean division; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// p / gcd(p, p'), made monic.
Polynomial square_free_part(const Polynomial& p);

struct RootMultiplicity {
  Rational root;
  unsigned multiplicity = 0;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// All rational roots with multiplicity, ascending. Irrational factors are
/// ignored. The zero polynomial has no well-defined roots and yields none.
std::vector<RootMultiplicity> rational_roots(const Polynomial& p);

/// det(t I - m), monic of degree n.
Polynomial char_poly(const Matrix& m);

/// Rational eigenvalues with algebraic multiplicity, or nullopt when the
/// characteristic polynomial does not split into rational linear factors.
std::optional<std::vector<RootMultiplicity>> rational_eigen(const Matrix& m);

/// ker((m - lambda I)^n). Throws NotAnEigenvalue if char_poly(lambda) != 0.
Subspace generalized_eigenspace(const Matrix& m, const Rational& lambda);

/// ker(m - lambda I); empty for non-eigenvalues.
Subspace eigenspace(const Matrix& m, const Rational& lambda);

}  // namespace cpa
