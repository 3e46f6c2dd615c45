#pragma once

#include "alia/ybe.hpp"

namespace alia {

/// Two products (succ, prec) on the same space, each stored as a table.
class PreAlgebraTable {
 public:
  PreAlgebraTable() = default;
  explicit PreAlgebraTable(std::size_t dim, std::string name = {})
      : succ_(dim), prec_(dim), name_(std::move(name)) {}
  /// Throws DimensionError when the tables differ in dimension.
  PreAlgebraTable(AlgebraTable succ, AlgebraTable prec, std::string name = {});

  std::size_t dim() const { return succ_.dim(); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const AlgebraTable& succ() const { return succ_; }
  const AlgebraTable& prec() const { return prec_; }
  AlgebraTable& succ() { return succ_; }
  AlgebraTable& prec() { return prec_; }

  friend bool operator==(const PreAlgebraTable& a, const PreAlgebraTable& b) {
    return a.succ_ == b.succ_ && a.prec_ == b.prec_;
  }

 private:
  AlgebraTable succ_;
  AlgebraTable prec_;
  std::string name_;
};

/// (x>y + x<y)>z - (y>x + y<x)>z + (y>z - z<y)<x + (z<x - x>z)<y = 0 on basis triples.
Report check_pre_left_alia(const PreAlgebraTable& p);

/// x*(y*z) = (y*x)*z + (x*y)*z on basis triples.
Report check_zinbiel(const AlgebraTable& z);

/// x>y = x*f(y) + g(x*y), x<y = f(y)*x + g(y*x). Throws PreconditionError
/// when z is not Zinbiel or the result fails its check.
PreAlgebraTable pre_from_zinbiel(const AlgebraTable& z, const LinearEndo& f, const LinearEndo& g);

/// (x*y)*z - x*(y*z) = (y*x)*z - y*(x*z) on basis triples.
Report check_pre_lie(const AlgebraTable& l);

/// x>y = x*y, x<y = -y*x. Throws PreconditionError when l is not pre-Lie.
PreAlgebraTable pre_from_pre_lie(const AlgebraTable& l);

/// [x,y] = x>y + x<y. Throws PreconditionError when p is not pre-left-Alia.
AlgebraTable sub_adjacent(const PreAlgebraTable& p);

/// (L_succ, R_prec) acting on the sub-adjacent algebra itself.
Representation succ_prec_representation(const PreAlgebraTable& p);

/// u > v = l(Tu)v, u < v = r(Tv)u on V. Throws PreconditionError when T is
/// not a relative Rota-Baxter operator.
PreAlgebraTable induced_pre_on_module(const RelativeOperator& op);

/// x>y = T(l(x) T^-1 y), x<y = T(r(y) T^-1 x); the products sum to the
/// bracket of A. Throws PreconditionError when T is not a relative
/// Rota-Baxter operator or not square, SingularMatrix when T is singular.
PreAlgebraTable compatible_pre_from_invertible_rbo(const RelativeOperator& op);

/// Unique (succ, prec) with omega(x>y, z) = -omega(y, [x,z]) and
/// omega(x<y, z) = omega(x, [z,y] - [y,z]). Throws PreconditionError unless
/// omega is antisymmetric, nondegenerate and a 2-cocycle.
PreAlgebraTable pre_from_omega(const AlgebraTable& a, const BilinearForm& omega);

/// d = A x_{L*succ, L*succ - R*prec} A* with r = sum_i e_i* (x) e_i - e_i (x) e_i*.
/// Throws PreconditionError when p is not pre-left-Alia or Al(r) != 0.
LiftedSolution canonical_solution(const PreAlgebraTable& p);

}  // namespace alia
