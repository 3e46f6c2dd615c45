#include "alia/tensor.hpp"

#include "alia/errors.hpp"

namespace alia {

namespace {

std::string label(const std::vector<std::string>& names, std::size_t i) {
  return i < names.size() ? names[i] : "e" + std::to_string(i + 1);
}

void append_term(std::string& out, const Scalar& c, const std::string& basis) {
  Scalar mag = c.sign() < 0 ? -c : c;
  if (out.empty()) {
    if (c.sign() < 0) out += "-";
  } else {
    out += c.sign() < 0 ? " - " : " + ";
  }
  if (!mag.is_one()) out += mag.str() + "*";
  out += basis;
}

}  // namespace

bool Tensor2::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  if (left_ != o.left_ || right_ != o.right_) throw DimensionError("tensor shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  if (left_ != o.left_ || right_ != o.right_) throw DimensionError("tensor shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor2 Tensor2::operator-() const {
  Tensor2 out = *this;
  for (auto& s : out.data_) s = -s;
  return out;
}

bool Tensor3::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (dim_ != o.dim_) throw DimensionError("tensor shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (dim_ != o.dim_) throw DimensionError("tensor shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor2 tau(const Tensor2& t) {
  if (!t.is_square()) throw DimensionError("tau needs a square 2-tensor");
  const std::size_t n = t.dim_left();
  Tensor2 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = t(j, i);
  return out;
}

Tensor3 xi(const Tensor3& t) {
  const std::size_t n = t.dim();
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = t(k, i, j);
  return out;
}

Tensor3 tau_left(const Tensor3& t) {
  const std::size_t n = t.dim();
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = t(j, i, k);
  return out;
}

std::string format_tensor(const Tensor2& t, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < t.dim_left(); ++i)
    for (std::size_t j = 0; j < t.dim_right(); ++j)
      if (!t(i, j).is_zero()) append_term(out, t(i, j), label(names, i) + "⊗" + label(names, j));
  return out.empty() ? "0" : out;
}

std::string format_tensor(const Tensor3& t, const std::vector<std::string>& names) {
  std::string out;
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!t(i, j, k).is_zero())
          append_term(out, t(i, j, k),
                      label(names, i) + "⊗" + label(names, j) + "⊗" + label(names, k));
  return out.empty() ? "0" : out;
}

}  // namespace alia
