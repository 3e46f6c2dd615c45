#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "alia/linalg.hpp"
#include "alia/report.hpp"

namespace alia {

using Monomial = std::vector<unsigned>;

/// Graded lex: higher total degree first, then lexicographically larger.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Element of Q[x_1..x_n]. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, GradedLexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Scalar& c);
  /// x_{i+1}
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Monomial& m, const Scalar& c = 1);

  /// Parses sums of terms like `-3/2 * x1^2 * x3 + x2 - 5`. Whitespace is
  /// ignored and `*` between factors is optional. `nvars` = 0 takes the
  /// largest variable index seen; otherwise a larger index is a ParseError.
  static Polynomial parse(const std::string& text, std::size_t nvars = 0);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Scalar coefficient(const Monomial& m) const;
  /// Adds c * m, dropping the term when it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  /// `x1^2 + x1*x2 - 1/2*x2`, or `0`.
  std::string str() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& s, const Polynomial& p);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_arity(const Polynomial& o) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Linear automorphism of the degree-1 forms: column i is the image of x_{i+1}.
class Reflection {
 public:
  explicit Reflection(Matrix m);
  /// Exchanges x_{i+1} and x_{j+1}.
  static Reflection swap(std::size_t nvars, std::size_t i, std::size_t j);
  const Matrix& matrix() const { return m_; }
  std::size_t nvars() const { return m_.rows(); }

 private:
  Matrix m_;
};

/// Nonzero degree-1 form sum_i c_i x_i.
class LinearForm {
 public:
  explicit LinearForm(Vector coefficients);
  /// Parses a polynomial that must be homogeneous of degree 1.
  static LinearForm parse(const std::string& text, std::size_t nvars);
  const Vector& coefficients() const { return c_; }
  std::size_t nvars() const { return c_.size(); }
  Polynomial polynomial() const;

 private:
  Vector c_;
};

/// rank(I - R) = 1 and R^m = I for some m <= max_order; info reports rank
/// and order.
Report is_pseudo_reflection(const Reflection& r, unsigned max_order = 12);

/// Substitutes every x_i by its image, extended multiplicatively.
Polynomial apply_reflection(const Reflection& r, const Polynomial& f);

/// Exact quotient f / l. Throws InexactDivision when the remainder is nonzero.
Polynomial divide_exact(const Polynomial& f, const LinearForm& l);

/// D_R(f) = (f - R(f)) / l_R. Throws InexactDivision when some x_i - R(x_i)
/// is not a multiple of l_R (naming that x_i) or when the quotient is inexact.
Polynomial divided_difference(const Reflection& r, const LinearForm& l, const Polynomial& f);

/// All monomials in nvars variables of total degree <= max_degree, in
/// graded lex order from low degree up.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree);

/// D(fg) = D(f)g + R(f)D(g) for every pair of monomials of degree <= max_degree,
/// then for `random_pairs` seeded dense polynomial pairs of the same degree
/// bound. Witness index is the pair of monomial positions.
Report check_twisted_leibniz_poly(const Reflection& r, const LinearForm& l, unsigned max_degree,
                                  std::size_t random_pairs = 20, std::uint64_t seed = 1);

/// [f, g]_R = f D(g) - R(g) D(f).
Polynomial alia_bracket_poly(const Reflection& r, const LinearForm& l, const Polynomial& f,
                             const Polynomial& g);

/// Cyclic sum of [[x,y]_R - [y,x]_R, z]_R.
Polynomial alia_defect_poly(const Reflection& r, const LinearForm& l, const Polynomial& x,
                            const Polynomial& y, const Polynomial& z);

/// Symmetric Jacobi identity for [.,.]_R on `triples` seeded monomial triples
/// of degree <= max_degree. Witness index is the triple number.
Report check_alia_bracket_poly(const Reflection& r, const LinearForm& l, std::size_t triples,
                               unsigned max_degree, std::uint64_t seed = 1);

}  // namespace alia
