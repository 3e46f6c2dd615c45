#pragma once

#include <cstddef>
#include <string>

#include "alia/linalg.hpp"
#include "alia/report.hpp"
#include "alia/tensor.hpp"

namespace alia {

/// Linear map A -> A in the algebra's basis.
using LinearEndo = Matrix;

/// Finite-dimensional bilinear product [e_i, e_j] = sum_k c(i,j,k) e_k.
/// No symmetry is assumed.
class AlgebraTable {
 public:
  AlgebraTable() = default;
  explicit AlgebraTable(std::size_t dim, std::string name = {})
      : c_(dim), name_(std::move(name)) {}
  explicit AlgebraTable(Tensor3 constants, std::string name = {})
      : c_(std::move(constants)), name_(std::move(name)) {}

  std::size_t dim() const { return c_.dim(); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const Tensor3& constants() const { return c_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_(i, j, k); }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_(i, j, k);
  }

  /// [e_i, e_j]
  Vector product(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  /// L(e_i) y = [e_i, y]
  Matrix left(std::size_t i) const;
  /// R(e_j) x = [x, e_j]
  Matrix right(std::size_t j) const;
  Matrix left(const Vector& x) const;
  Matrix right(const Vector& y) const;

  bool is_zero() const { return c_.is_zero(); }

  /// Equality of structure constants; the name is ignored.
  friend bool operator==(const AlgebraTable& a, const AlgebraTable& b) { return a.c_ == b.c_; }

 private:
  Tensor3 c_;
  std::string name_;
};

/// LHS - RHS of the symmetric Jacobi identity at (x, y, z).
Vector alia_defect(const AlgebraTable& a, const Vector& x, const Vector& y, const Vector& z);

/// Symmetric Jacobi identity on all basis triples; witness is the first
/// failing (i,j,k) with its defect.
Report check_left_alia(const AlgebraTable& a);

/// Antisymmetric bracket that also satisfies the symmetric Jacobi identity.
Report check_lie(const AlgebraTable& a);

Report check_commutative(const AlgebraTable& m);
Report check_associative(const AlgebraTable& m);

/// [x, y] = x . f(y) + g(x . y) on a commutative associative algebra.
/// Throws PreconditionError when `m` is not commutative and associative.
AlgebraTable special_from_commutative(const AlgebraTable& m, const LinearEndo& f,
                                      const LinearEndo& g);

/// Twisted Leibniz rule D(f g) = D(f) g + R(f) D(g) on basis pairs. The
/// report's info records whether R is an algebra endomorphism.
Report check_twisted_derivation(const AlgebraTable& m, const LinearEndo& d, const LinearEndo& r);

/// [x, y]_R = x . D(y) - R(y) . D(x). Throws PreconditionError when D is
/// not a twisted derivation for R, or `m` is not commutative associative.
AlgebraTable bracket_from_twisted_derivation(const AlgebraTable& m, const LinearEndo& d,
                                             const LinearEndo& r);

}  // namespace alia
