#include "alia/fixtures.hpp"

namespace alia::fixtures {

PreAlgebraTable sample_pre() {
  PreAlgebraTable p(2, "sample");
  auto& s = p.succ();
  auto& q = p.prec();
  s(0, 1, 0) = 2;
  q(0, 1, 0) = -1;
  s(1, 0, 0) = 1;
  q(1, 0, 0) = -2;
  s(1, 1, 0) = 1;
  s(1, 1, 1) = 2;
  q(1, 1, 0) = -1;
  q(1, 1, 1) = -2;
  return p;
}

AlgebraTable sample_subadjacent() {
  AlgebraTable a(2, "sample sub-adjacent");
  a(0, 1, 0) = 1;
  a(1, 0, 0) = -1;
  return a;
}

AlgebraTable cyclic3() {
  AlgebraTable a(3, "cyclic3");
  a(0, 1, 1) = 1;
  a(1, 0, 1) = -1;
  a(1, 2, 2) = 1;
  a(2, 1, 2) = -1;
  a(2, 0, 0) = 1;
  a(0, 2, 0) = -1;
  return a;
}

AlgebraTable truncated_polynomial(std::size_t k) {
  AlgebraTable m(k, "Q[x]/(x^" + std::to_string(k) + ")");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; i + j < k; ++j) m(i, j, i + j) = 1;
  return m;
}

AlgebraTable half_shuffle_zinbiel(std::size_t k) {
  AlgebraTable z(k, "half-shuffle");
  for (std::size_t a = 1; a <= k; ++a)
    for (std::size_t b = 1; a + b <= k; ++b)
      z(a - 1, b - 1, a + b - 1) = Scalar(static_cast<long>(b), static_cast<long>(a + b));
  return z;
}

AlgebraTable pre_lie_dim2() {
  AlgebraTable l(2, "pre-lie dim 2");
  l(1, 1, 1) = 1;
  l(1, 0, 0) = 1;
  return l;
}

}  // namespace alia::fixtures
