#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "alia/scalar.hpp"

namespace alia {

/// Coordinates of an element in a fixed basis.
using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t dim);
Vector basis_vector(std::size_t dim, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);

/// Renders `2*e1 - e3`; `names` overrides the default basis labels e1..en.
std::string format_vector(const Vector& v, const std::vector<std::string>& names = {});

/// Dense rectangular matrix acting on column vectors: (M x)_i = sum_j M(i,j) x_j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-major nested initializer; rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  /// Matrix whose j-th column is `columns[j]`.
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& m, const Vector& v);
  Matrix operator-() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Rank by exact Gaussian elimination.
std::size_t rank(const Matrix& m);

/// Exact inverse via Gauss-Jordan elimination. Throws SingularMatrix (with
/// rank) when `m` is not invertible and DimensionError when it is not square.
Matrix invert(const Matrix& m);

Scalar determinant(const Matrix& m);

/// Solves m x = b for square nonsingular m.
Vector solve(const Matrix& m, const Vector& b);

}  // namespace alia

namespace alia {

/// Renders `[[1,0],[0,1]]`.
std::string format_matrix(const Matrix& m);

}  // namespace alia
