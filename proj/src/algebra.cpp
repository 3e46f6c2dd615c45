#include "alia/algebra.hpp"

#include "alia/errors.hpp"

namespace alia {

namespace {

void require_dim(const AlgebraTable& a, const Vector& v) {
  if (v.size() != a.dim()) throw DimensionError("vector does not match algebra dimension");
}

void require_endo(const AlgebraTable& a, const LinearEndo& f, const char* what) {
  if (f.rows() != a.dim() || f.cols() != a.dim())
    throw DimensionError(std::string(what) + " must be a " + std::to_string(a.dim()) + "x" +
                         std::to_string(a.dim()) + " matrix");
}

void require_commutative_associative(const AlgebraTable& m) {
  if (auto rep = check_commutative(m); !rep.pass)
    throw PreconditionError("input algebra is not commutative: " + rep.to_text());
  if (auto rep = check_associative(m); !rep.pass)
    throw PreconditionError("input algebra is not associative: " + rep.to_text());
}

}  // namespace

Vector AlgebraTable::product(std::size_t i, std::size_t j) const {
  Vector out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = c_(i, j, k);
  return out;
}

Vector AlgebraTable::bracket(const Vector& x, const Vector& y) const {
  require_dim(*this, x);
  require_dim(*this, y);
  const std::size_t n = dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!c_(i, j, k).is_zero()) out[k] += w * c_(i, j, k);
    }
  }
  return out;
}

Matrix AlgebraTable::left(std::size_t i) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = c_(i, j, k);
  return m;
}

Matrix AlgebraTable::right(std::size_t j) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t k = 0; k < dim(); ++k) m(k, i) = c_(i, j, k);
  return m;
}

Matrix AlgebraTable::left(const Vector& x) const {
  require_dim(*this, x);
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x[i].is_zero()) m += x[i] * left(i);
  return m;
}

Matrix AlgebraTable::right(const Vector& y) const {
  require_dim(*this, y);
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    if (!y[j].is_zero()) m += y[j] * right(j);
  return m;
}

Vector alia_defect(const AlgebraTable& a, const Vector& x, const Vector& y, const Vector& z) {
  require_dim(a, x);
  require_dim(a, y);
  require_dim(a, z);
  auto b = [&a](const Vector& u, const Vector& v) { return a.bracket(u, v); };
  Vector lhs = b(b(x, y), z) + b(b(y, z), x) + b(b(z, x), y);
  Vector rhs = b(b(y, x), z) + b(b(z, y), x) + b(b(x, z), y);
  return lhs - rhs;
}

Report check_left_alia(const AlgebraTable& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector d = alia_defect(a, basis_vector(n, i), basis_vector(n, j), basis_vector(n, k));
        if (!is_zero(d)) return Report::failed("left-alia", {{i, j, k}, format_vector(d)});
      }
  return Report::ok("left-alia");
}

Report check_lie(const AlgebraTable& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector s = a.product(i, j) + a.product(j, i);
      if (!is_zero(s)) {
        Report r = Report::failed("lie", {{i, j}, "[ei,ej]+[ej,ei] = " + format_vector(s)});
        r.info["antisymmetric"] = "false";
        return r;
      }
    }
  Report alia = check_left_alia(a);
  Report r = alia.pass ? Report::ok("lie") : Report::failed("lie", *alia.witness);
  r.info["antisymmetric"] = "true";
  return r;
}

Report check_commutative(const AlgebraTable& m) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector d = m.product(i, j) - m.product(j, i);
      if (!is_zero(d)) return Report::failed("commutative", {{i, j}, format_vector(d)});
    }
  return Report::ok("commutative");
}

Report check_associative(const AlgebraTable& m) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector ei = basis_vector(n, i);
        Vector ek = basis_vector(n, k);
        Vector d = m.bracket(m.product(i, j), ek) - m.bracket(ei, m.product(j, k));
        if (!is_zero(d)) return Report::failed("associative", {{i, j, k}, format_vector(d)});
      }
  return Report::ok("associative");
}

AlgebraTable special_from_commutative(const AlgebraTable& m, const LinearEndo& f,
                                      const LinearEndo& g) {
  require_endo(m, f, "f");
  require_endo(m, g, "g");
  require_commutative_associative(m);
  const std::size_t n = m.dim();
  AlgebraTable out(n, "special");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = m.bracket(basis_vector(n, i), f.column(j)) + g * m.product(i, j);
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = v[k];
    }
  if (auto rep = check_left_alia(out); !rep.pass)
    throw PreconditionError("special construction failed self-verification: " + rep.to_text());
  return out;
}

Report check_twisted_derivation(const AlgebraTable& m, const LinearEndo& d, const LinearEndo& r) {
  require_endo(m, d, "D");
  require_endo(m, r, "R");
  const std::size_t n = m.dim();
  bool endomorphism = true;
  for (std::size_t i = 0; i < n && endomorphism; ++i)
    for (std::size_t j = 0; j < n && endomorphism; ++j)
      endomorphism = r * m.product(i, j) == m.bracket(r.column(i), r.column(j));

  Report rep = Report::ok("twisted-derivation");
  for (std::size_t i = 0; i < n && rep.pass; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = d * m.product(i, j);
      Vector rhs = m.bracket(d.column(i), basis_vector(n, j)) + m.bracket(r.column(i), d.column(j));
      if (lhs != rhs) {
        rep = Report::failed("twisted-derivation", {{i, j}, format_vector(lhs - rhs)});
        break;
      }
    }
  rep.info["R_is_algebra_endomorphism"] = endomorphism ? "true" : "false";
  return rep;
}

AlgebraTable bracket_from_twisted_derivation(const AlgebraTable& m, const LinearEndo& d,
                                             const LinearEndo& r) {
  require_commutative_associative(m);
  if (auto rep = check_twisted_derivation(m, d, r); !rep.pass)
    throw PreconditionError("D is not a twisted derivation for R: " + rep.to_text());
  const std::size_t n = m.dim();
  AlgebraTable out(n, "twisted-derivation bracket");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = m.bracket(basis_vector(n, i), d.column(j)) - m.bracket(r.column(j), d.column(i));
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = v[k];
    }
  if (auto rep = check_left_alia(out); !rep.pass)
    throw PreconditionError("twisted-derivation bracket failed self-verification: " +
                            rep.to_text());
  return out;
}

}  // namespace alia
