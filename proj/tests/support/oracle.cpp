#include "oracle.hpp"

namespace alia::oracle {

namespace {

struct Simple {
  Scalar coeff;
  Vector u;
  Vector v;
};

std::vector<Simple> simple_tensors(const Tensor2& r) {
  std::vector<Simple> out;
  const std::size_t n = r.dim_left();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!r(i, j).is_zero()) out.push_back({r(i, j), basis_vector(n, i), basis_vector(n, j)});
  return out;
}

void add_outer(Tensor3& t, const Scalar& s, const Vector& a, const Vector& b, const Vector& c) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) += s * a[i] * b[j] * c[k];
}

}  // namespace

Vector cyclic_defect(const AlgebraTable& a, const Vector& x, const Vector& y, const Vector& z) {
  auto term = [&a](const Vector& p, const Vector& q, const Vector& w) {
    return a.bracket(a.bracket(p, q) - a.bracket(q, p), w);
  };
  return term(x, y, z) + term(y, z, x) + term(z, x, y);
}

Tensor3 al(const AlgebraTable& a, const Tensor2& r) {
  Tensor3 t(a.dim());
  const auto s = simple_tensors(r);
  for (const auto& p : s)
    for (const auto& q : s) {
      const Scalar w = p.coeff * q.coeff;
      add_outer(t, w, a.bracket(p.u, q.u), p.v, q.v);
      add_outer(t, w, p.u, a.bracket(q.u, p.v) - a.bracket(p.v, q.u), q.v);
      add_outer(t, -w, p.u, q.u, a.bracket(q.v, p.v));
    }
  return t;
}

Tensor2 delta(const AlgebraTable& a, const Tensor2& r, std::size_t k) {
  const std::size_t n = a.dim();
  Tensor2 out(n);
  const Vector ek = basis_vector(n, k);
  for (const auto& p : simple_tensors(r)) {
    Vector left = a.bracket(p.u, ek) - a.bracket(ek, p.u);
    Vector right = a.bracket(p.v, ek);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += p.coeff * (left[i] * p.v[j] - p.u[i] * right[j]);
  }
  return out;
}

}  // namespace alia::oracle
