#include "alia/ybe.hpp"

#include <tuple>
#include <vector>

#include "alia/errors.hpp"

namespace alia {

namespace {

struct Entry {
  std::size_t i;
  std::size_t j;
  Scalar v;
};

std::vector<Entry> nonzero_entries(const RMatrix& r) {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < r.dim_left(); ++i)
    for (std::size_t j = 0; j < r.dim_right(); ++j)
      if (!r(i, j).is_zero()) out.push_back({i, j, r(i, j)});
  return out;
}

void require_square_over(const AlgebraTable& a, const RMatrix& r) {
  if (r.dim_left() != a.dim() || r.dim_right() != a.dim())
    throw DimensionError("r must be a " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) +
                         " tensor over the algebra");
}

void require_antisymmetric(const RMatrix& r) {
  if (!is_antisymmetric(r)) throw PreconditionError("r is not antisymmetric");
}

}  // namespace

bool is_antisymmetric(const RMatrix& r) { return r.is_square() && (r + tau(r)).is_zero(); }

RelativeOperator::RelativeOperator(Representation rep, Matrix t)
    : rep_(std::move(rep)), t_(std::move(t)) {
  if (t_.rows() != rep_.base().dim() || t_.cols() != rep_.module_dim())
    throw DimensionError("T must be dim(A) x dim(V)");
}

Tensor3 alia_ybe_tensor(const AlgebraTable& a, const RMatrix& r) {
  require_square_over(a, r);
  const std::size_t n = a.dim();
  const auto nz = nonzero_entries(r);
  Tensor3 out(n);
  for (const auto& [i, b, rib] : nz)
    for (const auto& [j, c, rjc] : nz) {
      Scalar w = rib * rjc;
      // [e_i, e_j] (x) e_b (x) e_c
      for (std::size_t k = 0; k < n; ++k)
        if (!a(i, j, k).is_zero()) out(k, b, c) += w * a(i, j, k);
    }
  for (const auto& [i, p, rip] : nz)
    for (const auto& [j, q, rjq] : nz) {
      Scalar w = rip * rjq;
      for (std::size_t k = 0; k < n; ++k) {
        // e_i (x) ([e_j, e_p] - [e_p, e_j]) (x) e_q
        Scalar s = a(j, p, k) - a(p, j, k);
        if (!s.is_zero()) out(i, k, q) += w * s;
        // - e_i (x) e_j (x) [e_q, e_p]
        if (!a(q, p, k).is_zero()) out(i, j, k) -= w * a(q, p, k);
      }
    }
  return out;
}

Report check_ybe(const AlgebraTable& a, const RMatrix& r) {
  Tensor3 al = alia_ybe_tensor(a, r);
  Report rep = Report::ok("ybe");
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n && rep.pass; ++i)
    for (std::size_t j = 0; j < n && rep.pass; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!al(i, j, k).is_zero()) {
          rep = Report::failed("ybe", {{i, j, k}, "Al(r) = " + format_tensor(al)});
          break;
        }
  rep.info["antisymmetric"] = is_antisymmetric(r) ? "true" : "false";
  return rep;
}

Comultiplication delta_from_r(const AlgebraTable& a, const RMatrix& r) {
  require_square_over(a, r);
  const std::size_t n = a.dim();
  const auto nz = nonzero_entries(r);
  Comultiplication delta(n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [i, j, rij] : nz)
      for (std::size_t m = 0; m < n; ++m) {
        // ([e_i, e_k] - [e_k, e_i]) (x) e_j
        Scalar s = a(i, k, m) - a(k, i, m);
        if (!s.is_zero()) delta[k](m, j) += rij * s;
        // - e_i (x) [e_j, e_k]
        if (!a(j, k, m).is_zero()) delta[k](i, m) -= rij * a(j, k, m);
      }
  return delta;
}

TriangularBialgebra triangular_bialgebra(const AlgebraTable& a, const RMatrix& r) {
  require_square_over(a, r);
  require_antisymmetric(r);
  if (auto rep = check_ybe(a, r); !rep.pass)
    throw PreconditionError("r is not a solution of the Yang-Baxter equation: " +
                            rep.witness->value);
  TriangularBialgebra out{delta_from_r(a, r), {}};
  out.dual = dualize_delta(out.delta);
  if (auto rep = check_coalgebra(out.delta); !rep.pass)
    throw PreconditionError("delta_r failed the coalgebra check: " + rep.to_text());
  if (auto rep = check_bialgebra_compat(a, out.delta); !rep.pass)
    throw PreconditionError("delta_r failed the compatibility check: " + rep.to_text());
  return out;
}

Matrix r_sharp(const RMatrix& r) {
  Matrix m(r.dim_right(), r.dim_left());
  for (std::size_t k = 0; k < r.dim_left(); ++k)
    for (std::size_t j = 0; j < r.dim_right(); ++j) m(j, k) = r(k, j);
  return m;
}

AlgebraTable dual_bracket_via_rsharp(const AlgebraTable& a, const RMatrix& r) {
  require_square_over(a, r);
  require_antisymmetric(r);
  const std::size_t n = a.dim();
  Representation co = coadjoint_representation(a);
  Matrix rs = r_sharp(r);
  AlgebraTable out(n, "dual bracket via r#");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = co.l_of(rs.column(i)) * basis_vector(n, j) +
                 co.r_of(rs.column(j)) * basis_vector(n, i);
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = v[k];
    }
  return out;
}

Tensor3 homomorphism_defect(const AlgebraTable& a, const RMatrix& r) {
  require_square_over(a, r);
  require_antisymmetric(r);
  const std::size_t n = a.dim();
  AlgebraTable dual = dualize_delta(delta_from_r(a, r));
  Matrix rs = r_sharp(r);
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = rs * dual.product(i, j) - a.bracket(rs.column(i), rs.column(j));
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = v[k];
    }
  return out;
}

Report check_relative_rbo(const RelativeOperator& op) {
  const auto& a = op.rep().base();
  const auto& t = op.t();
  const std::size_t m = op.rep().module_dim();
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      Vector tu = t.column(u);
      Vector tv = t.column(v);
      Vector lhs = a.bracket(tu, tv);
      Vector rhs = t * (op.rep().l_of(tu) * basis_vector(m, v) +
                        op.rep().r_of(tv) * basis_vector(m, u));
      if (lhs != rhs)
        return Report::failed("relative-rbo", {{u, v}, "[Tu,Tv] - T(l(Tu)v + r(Tv)u) = " +
                                                           format_vector(lhs - rhs)});
    }
  return Report::ok("relative-rbo");
}

Report check_rsharp_rbo_equivalence(const AlgebraTable& a, const RMatrix& r) {
  require_square_over(a, r);
  require_antisymmetric(r);
  const bool ybe = check_ybe(a, r).pass;
  const bool rbo = check_relative_rbo(RelativeOperator(coadjoint_representation(a), r_sharp(r))).pass;
  Report rep = Report::ok("rsharp-rbo-equivalence");
  rep.pass = ybe == rbo;
  rep.info["ybe"] = ybe ? "true" : "false";
  rep.info["relative_rbo"] = rbo ? "true" : "false";
  return rep;
}

BilinearForm omega_from_r(const AlgebraTable& a, const RMatrix& r) {
  require_square_over(a, r);
  require_antisymmetric(r);
  BilinearForm omega(invert(r_sharp(r)).transpose());
  const bool cocycle = check_two_cocycle(a, omega).pass;
  const bool rbo = check_relative_rbo(RelativeOperator(coadjoint_representation(a), r_sharp(r))).pass;
  if (cocycle != rbo)
    throw PreconditionError("omega 2-cocycle verdict disagrees with the r# operator verdict");
  return omega;
}

Report check_two_cocycle(const AlgebraTable& a, const BilinearForm& omega) {
  if (omega.dim() != a.dim()) throw DimensionError("form and algebra dimensions differ");
  const std::size_t n = a.dim();
  Report rep = Report::ok("two-cocycle");
  for (std::size_t i = 0; i < n && rep.pass; ++i)
    for (std::size_t j = 0; j < n && rep.pass; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector x = basis_vector(n, i);
        Vector y = basis_vector(n, j);
        Vector z = basis_vector(n, k);
        Scalar lhs = omega(x, a.product(j, k) - a.product(k, j));
        Scalar rhs = omega(a.product(i, k), y) - omega(a.product(i, j), z);
        if (lhs != rhs) {
          rep = Report::failed("two-cocycle", {{i, j, k}, "lhs = " + lhs.str() + ", rhs = " + rhs.str()});
          break;
        }
      }
  rep.info["antisymmetric"] = omega.is_antisymmetric() ? "true" : "false";
  rep.info["nondegenerate"] = omega.is_nondegenerate() ? "true" : "false";
  return rep;
}

Report check_connes_cocycle(const AlgebraTable& m, const BilinearForm& omega) {
  if (omega.dim() != m.dim()) throw DimensionError("form and algebra dimensions differ");
  if (auto rep = check_commutative(m); !rep.pass)
    throw PreconditionError("algebra is not commutative: " + rep.to_text());
  if (auto rep = check_associative(m); !rep.pass)
    throw PreconditionError("algebra is not associative: " + rep.to_text());
  const std::size_t n = m.dim();
  Report rep = Report::ok("connes-cocycle");
  if (!omega.is_antisymmetric()) {
    for (std::size_t i = 0; i < n && rep.pass; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (omega.matrix()(i, j) != -omega.matrix()(j, i)) {
          rep = Report::failed("connes-cocycle", {{i, j}, "form is not antisymmetric"});
          break;
        }
  }
  for (std::size_t i = 0; i < n && rep.pass; ++i)
    for (std::size_t j = 0; j < n && rep.pass; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector x = basis_vector(n, i);
        Vector y = basis_vector(n, j);
        Vector z = basis_vector(n, k);
        Scalar s = omega(m.product(i, j), z) + omega(m.product(j, k), x) + omega(m.product(k, i), y);
        if (!s.is_zero()) {
          rep = Report::failed("connes-cocycle", {{i, j, k}, "cyclic sum = " + s.str()});
          break;
        }
      }
  rep.info["nondegenerate"] = omega.is_nondegenerate() ? "true" : "false";
  return rep;
}

AlgebraTable cocycle_bracket_from_connes(const AlgebraTable& m, const BilinearForm& omega,
                                         const LinearEndo& f) {
  if (auto rep = check_connes_cocycle(m, omega); !rep.pass)
    throw PreconditionError("not a Connes cocycle: " + rep.to_text());
  if (!omega.is_nondegenerate()) throw PreconditionError("Connes cocycle is degenerate");
  const Matrix& w = omega.matrix();
  // omega(f^ x, y) = omega(x, f y) means (f^)^T W = W F.
  LinearEndo f_hat = (w * f * invert(w)).transpose();
  AlgebraTable table = special_from_commutative(m, f, -f_hat);
  table.set_name("cocycle special");
  if (auto rep = check_two_cocycle(table, omega); !rep.pass)
    throw PreconditionError("Connes construction failed self-verification: " + rep.to_text());
  return table;
}

LiftedSolution lift_T_sharp(const RelativeOperator& op) {
  const std::size_t n = op.rep().base().dim();
  const std::size_t m = op.rep().module_dim();
  LiftedSolution out{semidirect_product(dual_representation(op.rep())), RMatrix(n + m)};
  out.d.set_name("lift");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      out.r(n + i, a) = op.t()(a, i);
      out.r(a, n + i) = -op.t()(a, i);
    }
  return out;
}

}  // namespace alia
