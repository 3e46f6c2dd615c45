#pragma once

#include "alia/pre_alia.hpp"

namespace alia::fixtures {

/// Two-dimensional pre-left-Alia algebra:
///   e1>e2 = 2e1, e1<e2 = -e1, e2>e1 = e1, e2<e1 = -2e1,
///   e2>e2 = e1 + 2e2, e2<e2 = -e1 - 2e2.
PreAlgebraTable sample_pre();

/// Its sub-adjacent algebra [e1,e2] = e1, [e2,e1] = -e1.
AlgebraTable sample_subadjacent();

/// Antisymmetric [e1,e2] = e2, [e2,e3] = e3, [e3,e1] = e1. Not left-Alia.
AlgebraTable cyclic3();

/// Q[x]/(x^k) on the basis 1, x, ..., x^{k-1}.
AlgebraTable truncated_polynomial(std::size_t k);

/// t^a * t^b = b/(a+b) t^{a+b} on the basis t, ..., t^k, products of degree
/// above k dropped. Zinbiel.
AlgebraTable half_shuffle_zinbiel(std::size_t k = 3);

/// e2*e2 = e2, e2*e1 = e1. Pre-Lie.
AlgebraTable pre_lie_dim2();

}  // namespace alia::fixtures
