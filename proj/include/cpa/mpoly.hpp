#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cpa/linalg.hpp"

namespace cpa {

/// Sorted list of variable indices with repetition: t0*t0*t2 is {0, 0, 2},
/// the constant monomial is {}.
using Monomial = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables. No zero coefficients are stored.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t i);
  /// coeffs . t + c
  static MPoly affine(const Vector& coeffs, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient({}); }
  /// Coefficients of the degree-one monomials.
  Vector linear_part() const;
  /// Variables occurring with nonzero coefficient, ascending.
  std::vector<std::uint32_t> variables() const;

  void add_term(Monomial m, const Rational& c);
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& s, const MPoly& p);
  friend bool operator==(const MPoly&, const MPoly&) = default;

  Rational evaluate(const Vector& point) const;
  /// Substitute t = point + sum_j s_j directions[j]; the result lives in
  /// directions.size() variables.
  MPoly substitute(const Vector& point, const std::vector<Vector>& directions) const;

  /// Scale so the leading term (first in print order) has coefficient 1.
  MPoly normalized() const;

  /// Human-readable form using names[i] for variable i (default t1, t2, ...).
  std::string to_string(const std::vector<std::string>& names = {}) const;
  /// Monomial key such as "t1^2*t3" or "1" for the constant.
  static std::string monomial_key(const Monomial& m, const std::vector<std::string>& names = {});

 private:
  std::size_t nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// Variable names t1..tn.
std::vector<std::string> default_parameter_names(std::size_t n);

/// An affine subspace point + span(directions) of K^n, canonicalized so the
/// point vanishes at the pivot columns of the direction basis. Equal sets
/// compare equal.
class AffineSpace {
 public:
  AffineSpace() = default;
  AffineSpace(Vector point, Subspace directions);

  static AffineSpace whole(std::size_t n);
  static AffineSpace origin(std::size_t n);

  std::size_t ambient_dim() const { return directions_.ambient_dim(); }
  std::size_t dim() const { return directions_.dim(); }
  const Vector& point() const { return point_; }
  const Subspace& directions() const { return directions_; }

  bool contains(const Vector& v) const;
  bool contains(const AffineSpace& other) const;
  /// point + sum_j s_j direction_j
  Vector at(const Vector& s) const;

  /// Rows a_i and right-hand sides b_i with: v in the space iff a_i . v = b_i.
  std::pair<Matrix, Vector> equations() const;

  /// Intersect with {v : a . v = b}; nullopt if empty.
  std::optional<AffineSpace> restrict_to(const Matrix& a, const Vector& b) const;

  friend bool operator==(const AffineSpace&, const AffineSpace&) = default;

 private:
  Vector point_;
  Subspace directions_;
};

}  // namespace cpa
