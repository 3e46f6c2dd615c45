#include "alia/pre_alia.hpp"

#include "alia/errors.hpp"

namespace alia {

namespace {

void require_pre_left_alia(const PreAlgebraTable& p) {
  if (auto rep = check_pre_left_alia(p); !rep.pass)
    throw PreconditionError("not a pre-left-Alia algebra: " + rep.to_text());
}

void self_verify(const PreAlgebraTable& p, const char* what) {
  if (auto rep = check_pre_left_alia(p); !rep.pass)
    throw PreconditionError(std::string(what) + " failed self-verification: " + rep.to_text());
}

void require_compatible(const PreAlgebraTable& p, const AlgebraTable& a, const char* what) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (p.succ()(i, j, k) + p.prec()(i, j, k) != a(i, j, k))
          throw PreconditionError(std::string(what) + ": succ + prec differs from the bracket");
}

void store(AlgebraTable& t, std::size_t i, std::size_t j, const Vector& v) {
  for (std::size_t k = 0; k < v.size(); ++k) t(i, j, k) = v[k];
}

}  // namespace

PreAlgebraTable::PreAlgebraTable(AlgebraTable succ, AlgebraTable prec, std::string name)
    : succ_(std::move(succ)), prec_(std::move(prec)), name_(std::move(name)) {
  if (succ_.dim() != prec_.dim()) throw DimensionError("succ and prec dimensions differ");
}

Report check_pre_left_alia(const PreAlgebraTable& p) {
  const std::size_t n = p.dim();
  auto s = [&p](const Vector& x, const Vector& y) { return p.succ().bracket(x, y); };
  auto q = [&p](const Vector& x, const Vector& y) { return p.prec().bracket(x, y); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector x = basis_vector(n, i);
        Vector y = basis_vector(n, j);
        Vector z = basis_vector(n, k);
        Vector d = s(s(x, y) + q(x, y), z) - s(s(y, x) + q(y, x), z) + q(s(y, z) - q(z, y), x) +
                   q(q(z, x) - s(x, z), y);
        if (!is_zero(d)) return Report::failed("pre-left-alia", {{i, j, k}, format_vector(d)});
      }
  return Report::ok("pre-left-alia");
}

Report check_zinbiel(const AlgebraTable& z) {
  const std::size_t n = z.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector x = basis_vector(n, i);
        Vector w = basis_vector(n, k);
        Vector d = z.bracket(x, z.product(j, k)) - z.bracket(z.product(j, i), w) -
                   z.bracket(z.product(i, j), w);
        if (!is_zero(d)) return Report::failed("zinbiel", {{i, j, k}, format_vector(d)});
      }
  return Report::ok("zinbiel");
}

PreAlgebraTable pre_from_zinbiel(const AlgebraTable& z, const LinearEndo& f, const LinearEndo& g) {
  const std::size_t n = z.dim();
  if (f.rows() != n || f.cols() != n || g.rows() != n || g.cols() != n)
    throw DimensionError("f and g must be square of the algebra's dimension");
  if (auto rep = check_zinbiel(z); !rep.pass)
    throw PreconditionError("not a Zinbiel algebra: " + rep.to_text());
  PreAlgebraTable p(n, "from zinbiel");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector x = basis_vector(n, i);
      store(p.succ(), i, j, z.bracket(x, f.column(j)) + g * z.product(i, j));
      store(p.prec(), i, j, z.bracket(f.column(j), x) + g * z.product(j, i));
    }
  self_verify(p, "Zinbiel construction");
  return p;
}

Report check_pre_lie(const AlgebraTable& l) {
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector x = basis_vector(n, i);
        Vector y = basis_vector(n, j);
        Vector z = basis_vector(n, k);
        Vector d = l.bracket(l.product(i, j), z) - l.bracket(x, l.product(j, k)) -
                   l.bracket(l.product(j, i), z) + l.bracket(y, l.product(i, k));
        if (!is_zero(d)) return Report::failed("pre-lie", {{i, j, k}, format_vector(d)});
      }
  return Report::ok("pre-lie");
}

PreAlgebraTable pre_from_pre_lie(const AlgebraTable& l) {
  if (auto rep = check_pre_lie(l); !rep.pass)
    throw PreconditionError("not a pre-Lie algebra: " + rep.to_text());
  const std::size_t n = l.dim();
  PreAlgebraTable p(n, "from pre-lie");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        p.succ()(i, j, k) = l(i, j, k);
        p.prec()(i, j, k) = -l(j, i, k);
      }
  self_verify(p, "pre-Lie construction");
  return p;
}

AlgebraTable sub_adjacent(const PreAlgebraTable& p) {
  require_pre_left_alia(p);
  AlgebraTable a(p.succ().constants() + p.prec().constants(), "sub-adjacent");
  if (auto rep = check_left_alia(a); !rep.pass)
    throw PreconditionError("sub-adjacent algebra failed self-verification: " + rep.to_text());
  return a;
}

Representation succ_prec_representation(const PreAlgebraTable& p) {
  AlgebraTable a(p.succ().constants() + p.prec().constants(), "sub-adjacent");
  std::vector<Matrix> l;
  std::vector<Matrix> r;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    l.push_back(p.succ().left(i));
    r.push_back(p.prec().right(i));
  }
  return Representation(std::move(a), p.dim(), std::move(l), std::move(r));
}

PreAlgebraTable induced_pre_on_module(const RelativeOperator& op) {
  if (auto rep = check_relative_rbo(op); !rep.pass)
    throw PreconditionError("T is not a relative Rota-Baxter operator: " + rep.to_text());
  const std::size_t m = op.rep().module_dim();
  const Matrix& t = op.t();
  PreAlgebraTable p(m, "induced on module");
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      store(p.succ(), u, v, op.rep().l_of(t.column(u)).column(v));
      store(p.prec(), u, v, op.rep().r_of(t.column(v)).column(u));
    }
  self_verify(p, "induced pre-structure");
  return p;
}

PreAlgebraTable compatible_pre_from_invertible_rbo(const RelativeOperator& op) {
  const Matrix& t = op.t();
  if (!t.is_square()) throw PreconditionError("T is not square, hence not invertible");
  if (auto rep = check_relative_rbo(op); !rep.pass)
    throw PreconditionError("T is not a relative Rota-Baxter operator: " + rep.to_text());
  const Matrix t_inv = invert(t);
  const auto& a = op.rep().base();
  const std::size_t n = a.dim();
  PreAlgebraTable p(n, "compatible");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      store(p.succ(), i, j, t * (op.rep().l()[i] * t_inv.column(j)));
      store(p.prec(), i, j, t * (op.rep().r()[j] * t_inv.column(i)));
    }
  require_compatible(p, a, "compatible construction");
  self_verify(p, "compatible construction");
  return p;
}

PreAlgebraTable pre_from_omega(const AlgebraTable& a, const BilinearForm& omega) {
  if (!omega.is_antisymmetric()) throw PreconditionError("omega is not antisymmetric");
  if (!omega.is_nondegenerate()) throw PreconditionError("omega is degenerate");
  if (auto rep = check_two_cocycle(a, omega); !rep.pass)
    throw PreconditionError("omega is not a 2-cocycle: " + rep.to_text());
  const std::size_t n = a.dim();
  // omega(u, z) = u^T W z for all z  <=>  W^T u = (omega(u, e_z))_z.
  const Matrix solve_left = invert(omega.matrix().transpose());
  PreAlgebraTable p(n, "from omega");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector x = basis_vector(n, i);
      Vector y = basis_vector(n, j);
      Vector succ_row(n);
      Vector prec_row(n);
      for (std::size_t k = 0; k < n; ++k) {
        succ_row[k] = -omega(y, a.product(i, k));
        prec_row[k] = omega(x, a.product(k, j) - a.product(j, k));
      }
      store(p.succ(), i, j, solve_left * succ_row);
      store(p.prec(), i, j, solve_left * prec_row);
    }
  require_compatible(p, a, "omega construction");
  self_verify(p, "omega construction");
  return p;
}

LiftedSolution canonical_solution(const PreAlgebraTable& p) {
  require_pre_left_alia(p);
  LiftedSolution out = lift_T_sharp(RelativeOperator(succ_prec_representation(p),
                                                     Matrix::identity(p.dim())));
  out.d.set_name("canonical double");
  if (auto rep = check_ybe(out.d, out.r); !rep.pass)
    throw PreconditionError("canonical r failed self-verification: " + rep.to_text());
  return out;
}

}  // namespace alia
