#pragma once

#include <cstddef>
#include <vector>

#include "alia/algebra.hpp"

namespace alia {

/// Pair of linear actions (l, r) of an algebra on a module V, stored on the
/// algebra's basis: l[i] = l(e_i), r[i] = r(e_i), each moduleDim x moduleDim.
class Representation {
 public:
  Representation() = default;
  /// Throws DimensionError when the matrix lists do not fit `base` and `module_dim`.
  Representation(AlgebraTable base, std::size_t module_dim, std::vector<Matrix> l,
                 std::vector<Matrix> r);

  const AlgebraTable& base() const { return base_; }
  std::size_t module_dim() const { return module_dim_; }
  const std::vector<Matrix>& l() const { return l_; }
  const std::vector<Matrix>& r() const { return r_; }

  /// l(x), r(x) extended linearly from the basis values.
  Matrix l_of(const Vector& x) const;
  Matrix r_of(const Vector& x) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  AlgebraTable base_;
  std::size_t module_dim_ = 0;
  std::vector<Matrix> l_;
  std::vector<Matrix> r_;
};

/// Operator form of the representation axiom on basis pairs:
/// l([x,y]-[y,x]) = r(x)r(y) - r(y)r(x) + r(y)l(x) - r(x)l(y).
Report check_representation(const Representation& rep);

/// (L, R, A) with L(x)y = [x,y] = R(y)x.
Representation adjoint_representation(const AlgebraTable& a);

/// (l*, l* - r*, V*) with l*(x) = -l(x)^T.
Representation dual_representation(const Representation& rep);

/// Dual of the adjoint representation.
Representation coadjoint_representation(const AlgebraTable& a);

/// A (+) V with [x+u, y+v] = [x,y] + l(x)v + r(y)u, basis (e_1..e_n, f_1..f_m).
AlgebraTable semidirect_product(const Representation& rep);

}  // namespace alia
