#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "cpa/rational.hpp"

namespace cpa {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Rational& s, const Vector& v);
/// y += s * x
void axpy(Vector& y, const Rational& s, const Vector& x);
Rational dot(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  /// Row-major flattening, length rows * cols.
  const std::vector<Rational>& entries() const { return entries_; }

  Matrix transpose() const;
  Rational trace() const;
  Matrix pow(unsigned k) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& m);
Vector operator*(const Matrix& m, const Vector& v);

/// Rows stacked top to bottom; all blocks must share a column count.
Matrix vstack(const std::vector<Matrix>& blocks);
/// Reshape a length rows*cols vector (row-major) into a matrix.
Matrix reshape(const Vector& flat, std::size_t rows, std::size_t cols);
std::string to_string(const Matrix& m);

}  // namespace cpa
