#include "alia/scalar.hpp"

#include <cctype>

#include "alia/errors.hpp"

namespace alia {

namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  if (pos == s.size()) return false;
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  out.set_str(std::string(s.substr(pos)), 10);
  if (negative) out = -out;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Scalar::Scalar(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  mpz_class num;
  mpz_class den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, num)) throw ParseError("malformed rational '" + std::string(text) + "'");
  } else {
    auto den_text = trim(s.substr(slash + 1));
    if (!parse_integer(trim(s.substr(0, slash)), num) || den_text.empty() ||
        den_text.front() == '+' || den_text.front() == '-' || !parse_integer(den_text, den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Scalar(num, den);
}

std::string Scalar::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

}  // namespace alia
