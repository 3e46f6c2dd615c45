#include "alia/bialgebra.hpp"

#include "alia/errors.hpp"
#include "alia/representation.hpp"

namespace alia {

namespace {

// (R(x) (x) id) t with R(x)u = [u, x].
Tensor2 right_on_first_leg(const AlgebraTable& a, std::size_t x, const Tensor2& t) {
  const std::size_t n = a.dim();
  Tensor2 out(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t b = 0; b < n; ++b) {
      if (t(p, b).is_zero()) continue;
      for (std::size_t q = 0; q < n; ++q)
        if (!a(p, x, q).is_zero()) out(q, b) += t(p, b) * a(p, x, q);
    }
  return out;
}

}  // namespace

BilinearForm::BilinearForm(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw DimensionError("bilinear form needs a square matrix");
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionError("form argument size mismatch");
  Vector my = m_ * y;
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s += x[i] * my[i];
  return s;
}

Comultiplication::Comultiplication(std::vector<Tensor2> images) : images_(std::move(images)) {
  for (const auto& t : images_)
    if (t.dim_left() != dim() || t.dim_right() != dim())
      throw DimensionError("comultiplication images must be dim x dim");
}

Tensor2 Comultiplication::apply(const Vector& x) const {
  if (x.size() != dim()) throw DimensionError("vector does not match comultiplication dimension");
  Tensor2 out(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) out(i, j) += x[k] * images_[k](i, j);
  }
  return out;
}

bool Comultiplication::is_zero() const {
  for (const auto& t : images_)
    if (!t.is_zero()) return false;
  return true;
}

Report check_invariance(const AlgebraTable& a, const BilinearForm& b) {
  if (b.dim() != a.dim()) throw DimensionError("form and algebra dimensions differ");
  const std::size_t n = a.dim();
  Report rep = Report::ok("invariance");
  for (std::size_t i = 0; i < n && rep.pass; ++i)
    for (std::size_t j = 0; j < n && rep.pass; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar lhs = b(a.product(i, j), basis_vector(n, k));
        Scalar rhs = b(basis_vector(n, i), a.product(k, j) - a.product(j, k));
        if (lhs != rhs) {
          rep = Report::failed("invariance", {{i, j, k}, "B([x,y],z) = " + lhs.str() +
                                                             ", B(x,[z,y]-[y,z]) = " + rhs.str()});
          break;
        }
      }
  rep.info["symmetric"] = b.is_symmetric() ? "true" : "false";
  rep.info["rank"] = std::to_string(rank(b.matrix()));
  rep.info["nondegenerate"] = b.is_nondegenerate() ? "true" : "false";
  return rep;
}

Report check_quadratic(const AlgebraTable& a, const BilinearForm& b) {
  Report form = Report::ok("symmetric-nondegenerate");
  if (!b.is_symmetric() || !b.is_nondegenerate()) {
    form.pass = false;
    form.info["symmetric"] = b.is_symmetric() ? "true" : "false";
    form.info["nondegenerate"] = b.is_nondegenerate() ? "true" : "false";
  }
  return Report::all_of("quadratic", {check_left_alia(a), check_invariance(a, b), form});
}

std::pair<AlgebraTable, LinearEndo> quadratic_from_commutative(const AlgebraTable& m,
                                                               const LinearEndo& f,
                                                               const BilinearForm& b) {
  const std::size_t n = m.dim();
  if (b.dim() != n) throw DimensionError("form and algebra dimensions differ");
  if (!b.is_symmetric()) throw PreconditionError("bilinear form is not symmetric");
  if (!b.is_nondegenerate()) throw PreconditionError("bilinear form is degenerate");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (b(m.product(i, j), basis_vector(n, k)) != b(basis_vector(n, i), m.product(j, k)))
          throw PreconditionError("form is not invariant for the product at (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                  std::to_string(k + 1) + ")");
  LinearEndo f_hat = invert(b.matrix()) * f.transpose() * b.matrix();
  AlgebraTable table = special_from_commutative(m, f, -f_hat);
  table.set_name("quadratic special");
  if (auto rep = check_invariance(table, b); !rep.pass)
    throw PreconditionError("quadratic construction failed self-verification: " + rep.to_text());
  return {std::move(table), std::move(f_hat)};
}

Report check_coalgebra(const Comultiplication& delta) {
  const std::size_t n = delta.dim();
  for (std::size_t k = 0; k < n; ++k) {
    // (delta (x) id) delta(e_k), delta applied to the first leg.
    Tensor3 t(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& w = delta[k](i, j);
        if (w.is_zero()) continue;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (!delta[i](a, b).is_zero()) t(a, b, j) += w * delta[i](a, b);
      }
    Tensor3 u = tau_left(t) - t;
    Tensor3 v = u + xi(u) + xi(xi(u));
    if (!v.is_zero()) return Report::failed("coalgebra", {{k}, format_tensor(v)});
  }
  return Report::ok("coalgebra");
}

AlgebraTable dualize_delta(const Comultiplication& delta) {
  const std::size_t n = delta.dim();
  AlgebraTable out(n, "dual of comultiplication");
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j, k) = delta[k](i, j);
  return out;
}

Report check_bialgebra_compat(const AlgebraTable& a, const Comultiplication& delta) {
  if (a.dim() != delta.dim()) throw DimensionError("algebra and comultiplication dimensions differ");
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Tensor2 s = delta.apply(a.product(i, j) - a.product(j, i)) +
                  right_on_first_leg(a, i, delta[j]) - right_on_first_leg(a, j, delta[i]);
      Tensor2 v = tau(s) - s;
      if (!v.is_zero()) return Report::failed("bialgebra-compat", {{i, j}, format_tensor(v)});
    }
  return Report::ok("bialgebra-compat");
}

Report check_bialgebra(const AlgebraTable& a, const Comultiplication& delta) {
  return Report::all_of("bialgebra",
                        {check_left_alia(a), check_coalgebra(delta), check_bialgebra_compat(a, delta)});
}

AlgebraTable double_bracket(const AlgebraTable& a, const AlgebraTable& astar) {
  if (a.dim() != astar.dim()) throw DimensionError("A and A* must have the same dimension");
  const std::size_t n = a.dim();
  // Coadjoint actions of A on A*, and of A* on A** = A.
  Representation co_a = coadjoint_representation(a);
  Representation co_astar = coadjoint_representation(astar);
  AlgebraTable d(2 * n, "double");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        d(i, j, k) = a(i, j, k);
        d(n + i, n + j, n + k) = astar(i, j, k);
        // [e_i, e_j*] = (L* - R*)_{A*}(e_j*) e_i + L*_A(e_i) e_j*
        d(i, n + j, k) = co_astar.r()[j](k, i);
        d(i, n + j, n + k) = co_a.l()[i](k, j);
        // [e_i*, e_j] = L*_{A*}(e_i*) e_j + (L* - R*)_A(e_j) e_i*
        d(n + i, j, k) = co_astar.l()[i](k, j);
        d(n + i, j, n + k) = co_a.r()[j](k, i);
      }
  return d;
}

BilinearForm canonical_form(std::size_t n) {
  Matrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = 1;
    m(n + i, i) = 1;
  }
  return BilinearForm(std::move(m));
}

Report check_manin_triple(const AlgebraTable& a, const AlgebraTable& astar, const AlgebraTable& d) {
  if (a.dim() != astar.dim() || d.dim() != 2 * a.dim())
    throw DimensionError("Manin triple needs dim(d) = 2 dim(A) = 2 dim(A*)");
  const std::size_t n = a.dim();
  Report sub = Report::ok("subalgebras");
  for (std::size_t i = 0; i < 2 * n && sub.pass; ++i)
    for (std::size_t j = 0; j < 2 * n && sub.pass; ++j) {
      const bool in_a = i < n && j < n;
      const bool in_astar = i >= n && j >= n;
      if (!in_a && !in_astar) continue;
      const std::size_t off = in_a ? 0 : n;
      const AlgebraTable& part = in_a ? a : astar;
      for (std::size_t k = 0; k < 2 * n; ++k) {
        const bool inside = in_a ? k < n : k >= n;
        Scalar expect = inside ? part(i - off, j - off, k - off) : Scalar(0);
        if (d(i, j, k) != expect) {
          sub = Report::failed("subalgebras", {{i, j, k}, "d has " + d(i, j, k).str() +
                                                             ", expected " + expect.str()});
          break;
        }
      }
    }
  Report r = Report::all_of("manin-triple",
                            {std::move(sub), check_left_alia(d), check_invariance(d, canonical_form(n))});
  // Both halves are isotropic for the canonical form by construction.
  r.info["isotropic"] = "true";
  return r;
}

}  // namespace alia
