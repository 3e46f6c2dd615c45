#include "alia/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

#include "alia/errors.hpp"

namespace alia {

namespace {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

class PolyParser {
 public:
  PolyParser(const std::string& text, std::size_t nvars) : nvars_(nvars) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  Polynomial run() {
    if (s_.empty()) fail("empty polynomial");
    std::vector<std::pair<Monomial, Scalar>> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      Scalar sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      terms.push_back(term());
      terms.back().second = sign * terms.back().second;
    }
    std::size_t n = nvars_ ? nvars_ : max_index_;
    Polynomial p(n);
    for (auto& [m, c] : terms) {
      m.resize(n, 0);
      p.add_term(m, c);
    }
    return p;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial: " + why + " at position " + std::to_string(pos_));
  }

  unsigned long number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ - start > 9) fail("number too large");
    return std::stoul(s_.substr(start, pos_ - start));
  }

  std::pair<Monomial, Scalar> term() {
    Monomial m;
    Scalar c = 1;
    bool any = false;
    while (true) {
      if (peek() == 'x') {
        ++pos_;
        std::size_t i = number();
        if (i == 0) fail("variables are numbered from x1");
        if (nvars_ && i > nvars_) fail("variable x" + std::to_string(i) + " out of range");
        unsigned e = 1;
        if (peek() == '^') {
          ++pos_;
          e = static_cast<unsigned>(number());
        }
        if (m.size() < i) m.resize(i, 0);
        m[i - 1] += e;
        max_index_ = std::max(max_index_, i);
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
          ++pos_;
          while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        c = c * Scalar::parse(s_.substr(start, pos_ - start));
      } else {
        fail("expected a coefficient or variable");
      }
      any = true;
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      if (peek() == 'x' || std::isdigit(static_cast<unsigned char>(peek()))) continue;
      break;
    }
    if (!any) fail("empty term");
    return {m, c};
  }

  std::string s_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  std::size_t max_index_ = 0;
};

// Powers of the image of one variable, grown on demand.
class PowerCache {
 public:
  explicit PowerCache(Polynomial base) : powers_{Polynomial::constant(base.nvars(), 1), base} {}
  const Polynomial& get(unsigned e) {
    while (powers_.size() <= e) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[e];
  }

 private:
  std::vector<Polynomial> powers_;
};

Polynomial random_dense(std::size_t nvars, unsigned max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Polynomial p(nvars);
  for (const auto& m : monomials_up_to(nvars, max_degree)) p.add_term(m, coeff(rng));
  return p;
}

}  // namespace

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total_degree(a);
  unsigned db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DimensionError("variable index out of range");
  Monomial m(nvars, 0);
  m[i] = 1;
  return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::parse(const std::string& text, std::size_t nvars) {
  return PolyParser(text, nvars).run();
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.size() != nvars_) throw DimensionError("monomial arity differs from polynomial arity");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i + 1);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      os << mag.str();
    } else if (mag.is_one()) {
      os << vars;
    } else {
      os << mag.str() << "*" << vars;
    }
  }
  return os.str();
}

void Polynomial::require_same_arity(const Polynomial& o) const {
  if (nvars_ != o.nvars_)
    throw DimensionError("polynomials in " + std::to_string(nvars_) + " and " +
                         std::to_string(o.nvars_) + " variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_arity(b);
  Polynomial out(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial operator*(const Scalar& s, const Polynomial& p) {
  Polynomial out(p.nvars_);
  if (s.is_zero()) return out;
  for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, s * c);
  return out;
}

Polynomial Polynomial::operator-() const { return Scalar(-1) * *this; }

Reflection::Reflection(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw DimensionError("reflection matrix must be square");
}

Reflection Reflection::swap(std::size_t nvars, std::size_t i, std::size_t j) {
  if (i >= nvars || j >= nvars) throw DimensionError("swap index out of range");
  Matrix m = Matrix::identity(nvars);
  m(i, i) = 0;
  m(j, j) = 0;
  m(i, j) = 1;
  m(j, i) = 1;
  if (i == j) m(i, i) = 1;
  return Reflection(std::move(m));
}

LinearForm::LinearForm(Vector coefficients) : c_(std::move(coefficients)) {
  if (is_zero(c_)) throw PreconditionError("linear form must be nonzero");
}

LinearForm LinearForm::parse(const std::string& text, std::size_t nvars) {
  Polynomial p = Polynomial::parse(text, nvars);
  Vector c(nvars);
  for (const auto& [m, coeff] : p.terms()) {
    if (total_degree(m) != 1) throw ParseError("linear form must be homogeneous of degree 1");
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) c[i] = coeff;
  }
  return LinearForm(std::move(c));
}

Polynomial LinearForm::polynomial() const {
  Polynomial p(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Monomial m(c_.size(), 0);
    m[i] = 1;
    p.add_term(m, c_[i]);
  }
  return p;
}

Report is_pseudo_reflection(const Reflection& r, unsigned max_order) {
  const std::size_t n = r.nvars();
  const Matrix id = Matrix::identity(n);
  Report rep = Report::ok("pseudo-reflection");
  std::size_t rk = rank(id - r.matrix());
  rep.info["rank"] = std::to_string(rk);
  Matrix power = r.matrix();
  unsigned order = 0;
  for (unsigned m = 1; m <= max_order; ++m) {
    if (power == id) {
      order = m;
      break;
    }
    power = power * r.matrix();
  }
  rep.info["order"] = order ? std::to_string(order) : "none <= " + std::to_string(max_order);
  if (rk != 1) {
    rep.pass = false;
    rep.witness = Witness{{}, "rank(I - R) = " + std::to_string(rk)};
  } else if (!order) {
    rep.pass = false;
    rep.witness = Witness{{}, "R^m != I for m <= " + std::to_string(max_order)};
  }
  return rep;
}

Polynomial apply_reflection(const Reflection& r, const Polynomial& f) {
  const std::size_t n = f.nvars();
  if (r.nvars() != n) throw DimensionError("reflection and polynomial arities differ");
  std::vector<PowerCache> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial img(n);
    for (std::size_t k = 0; k < n; ++k) {
      Monomial m(n, 0);
      m[k] = 1;
      img.add_term(m, r.matrix()(k, i));
    }
    images.emplace_back(std::move(img));
  }
  Polynomial out(n);
  for (const auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) t = t * images[i].get(m[i]);
    out += t;
  }
  return out;
}

namespace {

// Quotient and remainder of f by l in lex order with the pivot variable of l
// most significant. The remainder is free of that variable.
std::pair<Polynomial, Polynomial> divide_with_remainder(const Polynomial& f, const LinearForm& l) {
  const std::size_t n = f.nvars();
  if (l.nvars() != n) throw DimensionError("linear form and polynomial arities differ");
  std::size_t p = 0;
  while (l.coefficients()[p].is_zero()) ++p;
  const Polynomial lp = l.polynomial();
  const Scalar lead = l.coefficients()[p];
  auto before = [p](const Monomial& a, const Monomial& b) {
    if (a[p] != b[p]) return a[p] < b[p];
    return a < b;
  };
  Polynomial rem = f;
  Polynomial q(n);
  while (!rem.is_zero()) {
    auto top = std::max_element(rem.terms().begin(), rem.terms().end(),
                                [&](const auto& a, const auto& b) { return before(a.first, b.first); });
    if (top->first[p] == 0) break;
    Monomial m = top->first;
    m[p] -= 1;
    Polynomial step = Polynomial::monomial(m, top->second / lead);
    q += step;
    rem -= step * lp;
  }
  return {q, rem};
}

}  // namespace

Polynomial divide_exact(const Polynomial& f, const LinearForm& l) {
  auto [q, rem] = divide_with_remainder(f, l);
  if (!rem.is_zero())
    throw InexactDivision(f.str(), "remainder " + rem.str() + " modulo " + l.polynomial().str());
  return q;
}

Polynomial divided_difference(const Reflection& r, const LinearForm& l, const Polynomial& f) {
  const std::size_t n = f.nvars();
  if (r.nvars() != n || l.nvars() != n)
    throw DimensionError("reflection, linear form and polynomial arities differ");
  // (I - R) x = Delta(x) l on degree-1 forms.
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial x = Polynomial::variable(n, i);
    Polynomial diff = x - apply_reflection(r, x);
    if (!divide_with_remainder(diff, l).second.is_zero())
      throw InexactDivision(x.str(), x.str() + " - R(" + x.str() + ") = " + diff.str() +
                                         " is not a multiple of " + l.polynomial().str());
  }
  Polynomial diff = f - apply_reflection(r, f);
  auto [q, rem] = divide_with_remainder(diff, l);
  if (!rem.is_zero())
    throw InexactDivision(f.str(), "f - R(f) leaves remainder " + rem.str() + " modulo " +
                                       l.polynomial().str());
  return q;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree) {
  std::vector<Monomial> out;
  Monomial m(nvars, 0);
  // Enumerates exponent vectors with sum <= max_degree.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == nvars) {
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m[i] = e;
      self(self, i + 1, left - e);
    }
    m[i] = 0;
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return GradedLexGreater{}(b, a); });
  return out;
}

Report check_twisted_leibniz_poly(const Reflection& r, const LinearForm& l, unsigned max_degree,
                                  std::size_t random_pairs, std::uint64_t seed) {
  const std::size_t n = r.nvars();
  auto defect = [&](const Polynomial& f, const Polynomial& g) {
    return divided_difference(r, l, f * g) - divided_difference(r, l, f) * g -
           apply_reflection(r, f) * divided_difference(r, l, g);
  };
  const auto monos = monomials_up_to(n, max_degree);
  std::vector<Polynomial> d(monos.size());
  std::vector<Polynomial> rf(monos.size());
  for (std::size_t a = 0; a < monos.size(); ++a) {
    Polynomial f = Polynomial::monomial(monos[a]);
    d[a] = divided_difference(r, l, f);
    rf[a] = apply_reflection(r, f);
  }
  for (std::size_t a = 0; a < monos.size(); ++a)
    for (std::size_t b = 0; b < monos.size(); ++b) {
      Polynomial f = Polynomial::monomial(monos[a]);
      Polynomial g = Polynomial::monomial(monos[b]);
      Polynomial def = divided_difference(r, l, f * g) - d[a] * g - rf[a] * d[b];
      if (!def.is_zero())
        return Report::failed("twisted-leibniz", {{a, b}, "f = " + f.str() + ", g = " + g.str() +
                                                              ", defect = " + def.str()});
    }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < random_pairs; ++t) {
    Polynomial f = random_dense(n, max_degree, rng);
    Polynomial g = random_dense(n, max_degree, rng);
    Polynomial def = defect(f, g);
    if (!def.is_zero())
      return Report::failed("twisted-leibniz",
                            {{monos.size() + t}, "random pair, defect = " + def.str()});
  }
  Report rep = Report::ok("twisted-leibniz");
  rep.info["monomials"] = std::to_string(monos.size());
  rep.info["pairs"] = std::to_string(monos.size() * monos.size() + random_pairs);
  return rep;
}

Polynomial alia_bracket_poly(const Reflection& r, const LinearForm& l, const Polynomial& f,
                             const Polynomial& g) {
  return f * divided_difference(r, l, g) - apply_reflection(r, g) * divided_difference(r, l, f);
}

Polynomial alia_defect_poly(const Reflection& r, const LinearForm& l, const Polynomial& x,
                            const Polynomial& y, const Polynomial& z) {
  auto br = [&](const Polynomial& f, const Polynomial& g) { return alia_bracket_poly(r, l, f, g); };
  auto term = [&](const Polynomial& a, const Polynomial& b, const Polynomial& c) {
    return br(br(a, b) - br(b, a), c);
  };
  return term(x, y, z) + term(y, z, x) + term(z, x, y);
}

Report check_alia_bracket_poly(const Reflection& r, const LinearForm& l, std::size_t triples,
                               unsigned max_degree, std::uint64_t seed) {
  const auto monos = monomials_up_to(r.nvars(), max_degree);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  for (std::size_t t = 0; t < triples; ++t) {
    Polynomial x = Polynomial::monomial(monos[pick(rng)]);
    Polynomial y = Polynomial::monomial(monos[pick(rng)]);
    Polynomial z = Polynomial::monomial(monos[pick(rng)]);
    Polynomial def = alia_defect_poly(r, l, x, y, z);
    if (!def.is_zero())
      return Report::failed("poly-alia", {{t}, "x = " + x.str() + ", y = " + y.str() +
                                                   ", z = " + z.str() + ", defect = " + def.str()});
  }
  Report rep = Report::ok("poly-alia");
  rep.info["triples"] = std::to_string(triples);
  rep.info["seed"] = std::to_string(seed);
  return rep;
}

}  // namespace alia
