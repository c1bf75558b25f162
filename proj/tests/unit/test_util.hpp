#pragma once

#include <random>

#include "cpa/matrix.hpp"

namespace cpa::testing {

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Plain Gaussian elimination determinant, kept separate from the library code.
inline Rational determinant(Matrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m(r, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

}  // namespace cpa::testing
