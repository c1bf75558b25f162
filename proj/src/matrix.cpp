#include "cpa/matrix.hpp"

#include <sstream>

#include "cpa/error.hpp"

namespace cpa {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

static void check_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

Vector add(const Vector& a, const Vector& b) {
  check_same_length(a, b);
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  check_same_length(a, b);
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scaled(const Rational& s, const Vector& v) {
  Vector r(v.size());
  if (is_zero(s)) return r;
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

void axpy(Vector& y, const Rational& s, const Vector& x) {
  check_same_length(y, x);
  if (is_zero(s)) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!is_zero(x[i])) y[i] += s * x[i];
  }
}

Rational dot(const Vector& a, const Vector& b) {
  check_same_length(a, b);
  Rational r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i]) && !is_zero(b[i])) r += a[i] * b[i];
  }
  return r;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : entries_) {
    if (!cpa::is_zero(x)) return false;
  }
  return true;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational Matrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::NotSquare, "trace");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::pow(unsigned k) const {
  if (!is_square()) throw Error(ErrorCode::NotSquare, "pow");
  Matrix result = identity(rows_);
  Matrix base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!is_zero(b(k, j))) r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = s * m(i, j);
  return r;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  Vector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_zero(v[j]) && !is_zero(m(i, j))) r[i] += m(i, j) * v[j];
    }
  }
  return r;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  std::size_t rows = 0;
  std::size_t cols = blocks.empty() ? 0 : blocks.front().cols();
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorCode::DimensionMismatch, "vstack");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = b(r, c);
    r0 += b.rows();
  }
  return out;
}

Matrix reshape(const Vector& flat, std::size_t rows, std::size_t cols) {
  if (flat.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "reshape");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = flat[r * cols + c];
  return m;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << to_string(m(r, c));
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace cpa
