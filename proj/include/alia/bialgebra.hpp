#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "alia/algebra.hpp"

namespace alia {

/// B(x, y) = x^T M y. Symmetry and nondegeneracy are checked on demand.
class BilinearForm {
 public:
  BilinearForm() = default;
  /// Throws DimensionError for a non-square matrix.
  explicit BilinearForm(Matrix m);

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  Scalar operator()(const Vector& x, const Vector& y) const;

  bool is_symmetric() const { return m_ == m_.transpose(); }
  bool is_antisymmetric() const { return m_ == -m_.transpose(); }
  bool is_nondegenerate() const { return rank(m_) == dim(); }

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  Matrix m_;
};

/// delta(e_k) = sum_{i,j} delta[k](i,j) e_i (x) e_j.
class Comultiplication {
 public:
  Comultiplication() = default;
  explicit Comultiplication(std::size_t dim) : images_(dim, Tensor2(dim)) {}
  /// Throws DimensionError unless every image is dim x dim.
  explicit Comultiplication(std::vector<Tensor2> images);

  std::size_t dim() const { return images_.size(); }
  const Tensor2& operator[](std::size_t k) const { return images_[k]; }
  Tensor2& operator[](std::size_t k) { return images_[k]; }
  Tensor2 apply(const Vector& x) const;
  bool is_zero() const;

  friend bool operator==(const Comultiplication&, const Comultiplication&) = default;

 private:
  std::vector<Tensor2> images_;
};

/// B([x,y], z) = B(x, [z,y] - [y,z]) on basis triples. Info records symmetry,
/// rank and nondegeneracy so a full quadratic verdict can be read off.
Report check_invariance(const AlgebraTable& a, const BilinearForm& b);

/// Left-Alia identity, invariance, symmetric and nondegenerate form.
Report check_quadratic(const AlgebraTable& a, const BilinearForm& b);

/// B-adjoint f^ = B^-1 f^T B and the table [x,y] = x . f(y) - f^(x . y).
/// Throws PreconditionError unless B is symmetric, nondegenerate and
/// invariant for the commutative associative product.
std::pair<AlgebraTable, LinearEndo> quadratic_from_commutative(const AlgebraTable& m,
                                                               const LinearEndo& f,
                                                               const BilinearForm& b);

/// (id + xi + xi^2)(tau (x) id - id)(delta (x) id) delta (e_k) = 0 for all k.
Report check_coalgebra(const Comultiplication& delta);

/// Linear dual bracket on A*: [e_i*, e_j*] = sum_k delta[k](i,j) e_k*.
AlgebraTable dualize_delta(const Comultiplication& delta);

/// (tau - id)(delta([x,y]-[y,x]) + (R(x) (x) id) delta(y) - (R(y) (x) id) delta(x)) = 0
/// on basis pairs.
Report check_bialgebra_compat(const AlgebraTable& a, const Comultiplication& delta);

/// Conjunction of check_left_alia, check_coalgebra and check_bialgebra_compat.
Report check_bialgebra(const AlgebraTable& a, const Comultiplication& delta);

/// Bracket on A (+) A* (basis e_1..e_n, e_1*..e_n*) assembled from both
/// brackets and their coadjoint actions on each other.
AlgebraTable double_bracket(const AlgebraTable& a, const AlgebraTable& astar);

/// [[0, I], [I, 0]] on A (+) A*.
BilinearForm canonical_form(std::size_t n);

/// Subalgebra restriction, left-Alia identity on d and invariance of the
/// canonical form. Throws DimensionError unless d.dim() == 2 * a.dim().
Report check_manin_triple(const AlgebraTable& a, const AlgebraTable& astar, const AlgebraTable& d);

}  // namespace alia
