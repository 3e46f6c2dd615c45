#pragma once

#include "alia/bialgebra.hpp"
#include "alia/representation.hpp"

namespace alia {

/// r in A (x) A as r(i,j) e_i (x) e_j.
using RMatrix = Tensor2;

bool is_antisymmetric(const RMatrix& r);

/// Linear map T : V -> A together with the representation it is relative to.
class RelativeOperator {
 public:
  /// Throws DimensionError unless T is dim(A) x dim(V).
  RelativeOperator(Representation rep, Matrix t);

  const Representation& rep() const { return rep_; }
  const Matrix& t() const { return t_; }

 private:
  Representation rep_;
  Matrix t_;
};

/// Al(r) from a single closed-form contraction over the coefficients of r:
///   Al(r) = sum [u_i,u_j] (x) v_i (x) v_j + u_i (x) ([u_j,v_i] - [v_i,u_j]) (x) v_j
///           - u_i (x) u_j (x) [v_j,v_i].
Tensor3 alia_ybe_tensor(const AlgebraTable& a, const RMatrix& r);

/// Al(r) = 0; info reports antisymmetry of r.
Report check_ybe(const AlgebraTable& a, const RMatrix& r);

/// delta_r(x) = ((R - L)(x) (x) id - id (x) R(x)) r. No antisymmetry needed.
Comultiplication delta_from_r(const AlgebraTable& a, const RMatrix& r);

struct TriangularBialgebra {
  Comultiplication delta;
  AlgebraTable dual;
};

/// delta_r and its dual bracket for an antisymmetric solution. Throws
/// PreconditionError when r is not antisymmetric or Al(r) != 0, and when the
/// result fails the coalgebra or compatibility checks.
TriangularBialgebra triangular_bialgebra(const AlgebraTable& a, const RMatrix& r);

/// r#: A* -> A, r#(e_k*) = sum_j r(k,j) e_j. The matrix is r^T.
Matrix r_sharp(const RMatrix& r);

/// [a*, b*] = L*(r# a*) b* + (L* - R*)(r# b*) a*. Throws PreconditionError
/// unless r is antisymmetric.
AlgebraTable dual_bracket_via_rsharp(const AlgebraTable& a, const RMatrix& r);

/// Entries <r#([e_i*, e_j*]) - [r# e_i*, r# e_j*], e_k*> with the dual bracket
/// of delta_r. Throws PreconditionError unless r is antisymmetric.
Tensor3 homomorphism_defect(const AlgebraTable& a, const RMatrix& r);

/// [Tu, Tv] = T(l(Tu)v + r(Tv)u) on basis pairs of V.
Report check_relative_rbo(const RelativeOperator& op);

/// Computes check_ybe(a, r) and check_relative_rbo(r# on the coadjoint
/// representation) independently; passes iff the verdicts agree.
Report check_rsharp_rbo_equivalence(const AlgebraTable& a, const RMatrix& r);

/// omega(x, y) = <(r#)^-1 x, y>, matrix ((r#)^-1)^T. Throws PreconditionError
/// for non-antisymmetric r and SingularMatrix when r# is not invertible.
BilinearForm omega_from_r(const AlgebraTable& a, const RMatrix& r);

/// omega(x, [y,z] - [z,y]) = omega([x,z], y) - omega([x,y], z) on basis
/// triples; antisymmetry and nondegeneracy are reported in info.
Report check_two_cocycle(const AlgebraTable& a, const BilinearForm& omega);

/// omega(x.y, z) + omega(y.z, x) + omega(z.x, y) = 0 and omega antisymmetric.
/// Throws PreconditionError when m is not commutative and associative.
Report check_connes_cocycle(const AlgebraTable& m, const BilinearForm& omega);

/// For a nondegenerate Connes cocycle: the omega-adjoint f^ of f and the
/// table [x,y] = x . f(y) - f^(x . y), which must satisfy the 2-cocycle
/// condition for omega. Throws PreconditionError otherwise.
AlgebraTable cocycle_bracket_from_connes(const AlgebraTable& m, const BilinearForm& omega,
                                         const LinearEndo& f);

struct LiftedSolution {
  AlgebraTable d;
  RMatrix r;
};

/// d = A x_{l*, l*-r*} V* and r = sum_i f_i* (x) T f_i - T f_i (x) f_i*,
/// basis (e_1..e_n, f_1*..f_m*).
LiftedSolution lift_T_sharp(const RelativeOperator& op);

}  // namespace alia
