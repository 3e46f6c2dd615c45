#pragma once

// Brute-force evaluations written directly from the defining formulas, kept
// independent of the library's index contractions.

#include "alia/algebra.hpp"
#include "alia/tensor.hpp"

namespace alia::oracle {

/// sum over cyclic (x,y,z) of [[x,y] - [y,x], z]
Vector cyclic_defect(const AlgebraTable& a, const Vector& x, const Vector& y, const Vector& z);

/// Al(r) expanded over the simple tensors r = sum u_s (x) v_s with one
/// simple tensor per nonzero coefficient.
Tensor3 al(const AlgebraTable& a, const Tensor2& r);

/// delta_r(e_k) = sum ([u,e_k] - [e_k,u]) (x) v - u (x) [v,e_k].
Tensor2 delta(const AlgebraTable& a, const Tensor2& r, std::size_t k);

}  // namespace alia::oracle
