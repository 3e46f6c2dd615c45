#include "alia/representation.hpp"

#include "alia/errors.hpp"

namespace alia {

Representation::Representation(AlgebraTable base, std::size_t module_dim, std::vector<Matrix> l,
                               std::vector<Matrix> r)
    : base_(std::move(base)), module_dim_(module_dim), l_(std::move(l)), r_(std::move(r)) {
  if (l_.size() != base_.dim() || r_.size() != base_.dim())
    throw DimensionError("representation needs one l and one r matrix per basis element");
  for (const auto* list : {&l_, &r_})
    for (const auto& m : *list)
      if (m.rows() != module_dim_ || m.cols() != module_dim_)
        throw DimensionError("representation matrices must be " + std::to_string(module_dim_) +
                             "x" + std::to_string(module_dim_));
}

Matrix Representation::l_of(const Vector& x) const {
  if (x.size() != base_.dim()) throw DimensionError("vector does not match algebra dimension");
  Matrix m(module_dim_, module_dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) m += x[i] * l_[i];
  return m;
}

Matrix Representation::r_of(const Vector& x) const {
  if (x.size() != base_.dim()) throw DimensionError("vector does not match algebra dimension");
  Matrix m(module_dim_, module_dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) m += x[i] * r_[i];
  return m;
}

Report check_representation(const Representation& rep) {
  const auto& a = rep.base();
  const std::size_t n = a.dim();
  const auto& l = rep.l();
  const auto& r = rep.r();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = rep.l_of(a.product(i, j) - a.product(j, i));
      Matrix rhs = r[i] * r[j] - r[j] * r[i] + r[j] * l[i] - r[i] * l[j];
      if (lhs != rhs)
        return Report::failed("representation", {{i, j}, "lhs - rhs = " + format_matrix(lhs - rhs)});
    }
  return Report::ok("representation");
}

Representation adjoint_representation(const AlgebraTable& a) {
  std::vector<Matrix> l;
  std::vector<Matrix> r;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    l.push_back(a.left(i));
    r.push_back(a.right(i));
  }
  return Representation(a, a.dim(), std::move(l), std::move(r));
}

Representation dual_representation(const Representation& rep) {
  std::vector<Matrix> l;
  std::vector<Matrix> r;
  for (std::size_t i = 0; i < rep.base().dim(); ++i) {
    l.push_back(-rep.l()[i].transpose());
    r.push_back(-(rep.l()[i] - rep.r()[i]).transpose());
  }
  return Representation(rep.base(), rep.module_dim(), std::move(l), std::move(r));
}

Representation coadjoint_representation(const AlgebraTable& a) {
  return dual_representation(adjoint_representation(a));
}

AlgebraTable semidirect_product(const Representation& rep) {
  const auto& a = rep.base();
  const std::size_t n = a.dim();
  const std::size_t m = rep.module_dim();
  AlgebraTable d(n + m, "semidirect");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d(i, j, k) = a(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        d(i, n + b, n + c) = rep.l()[i](c, b);
        d(n + b, i, n + c) = rep.r()[i](c, b);
      }
  return d;
}

}  // namespace alia
