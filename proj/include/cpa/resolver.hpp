#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpa/mpoly.hpp"
#include "cpa/polynomial.hpp"

namespace cpa {

struct ResolveOptions {
  /// Upper bound on visited search nodes before giving up as unresolved.
  std::size_t max_nodes = 20000;
};

/// Outcome of solving a system of polynomials of degree <= 2 exactly.
///
/// When `resolved` is true, the common zero set over an algebraically
/// closed field is exactly the union of `components`, each a rational
/// affine subspace on which every input polynomial vanishes identically.
/// Components are maximal and sorted (dimension descending, then point and
/// direction data lexicographically). When false, nothing is claimed and
/// `reason` says where the search stopped.
struct Resolution {
  bool resolved = false;
  std::vector<AffineSpace> components;
  std::string reason;
};

Resolution resolve(const std::vector<MPoly>& polys, std::size_t nvars, const ResolveOptions& options = {});

/// Factor a polynomial of degree 1 or 2 into rational affine factors.
/// Returns the distinct factors (one for a square), or nullopt when it does
/// not split over the rationals.
std::optional<std::vector<MPoly>> linear_factors(const MPoly& q);

/// View a polynomial in one variable `var` as a univariate Polynomial;
/// other variables must not occur.
Polynomial to_univariate(const MPoly& p, std::uint32_t var);

/// Resultant with respect to variable 1 of two polynomials in two variables,
/// as a univariate polynomial in variable 0.
Polynomial resultant_in_first(const MPoly& p, const MPoly& q);

}  // namespace cpa
