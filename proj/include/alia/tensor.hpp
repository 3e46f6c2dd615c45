#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "alia/scalar.hpp"

namespace alia {

/// Element of A (x) B as the coefficient grid t(i,j) of e_i (x) f_j.
class Tensor2 {
 public:
  Tensor2() = default;
  explicit Tensor2(std::size_t dim) : Tensor2(dim, dim) {}
  Tensor2(std::size_t dim_left, std::size_t dim_right)
      : left_(dim_left), right_(dim_right), data_(dim_left * dim_right) {}

  std::size_t dim_left() const { return left_; }
  std::size_t dim_right() const { return right_; }
  bool is_square() const { return left_ == right_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * right_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * right_ + j]; }

  bool is_zero() const;
  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  Tensor2 operator-() const;

  friend bool operator==(const Tensor2&, const Tensor2&) = default;

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::vector<Scalar> data_;
};

/// Element of A (x) A (x) A as the cube t(i,j,k) of e_i (x) e_j (x) e_k.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }

  bool is_zero() const;
  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> data_;
};

/// Swap of tensor legs, x (x) y -> y (x) x. Throws DimensionError when not square.
Tensor2 tau(const Tensor2& t);

/// Cyclic shift x (x) y (x) z -> y (x) z (x) x, i.e. (xi t)(i,j,k) = t(k,i,j).
Tensor3 xi(const Tensor3& t);

/// tau (x) id: (t')(i,j,k) = t(j,i,k).
Tensor3 tau_left(const Tensor3& t);

/// Renders a 2-tensor as `2*e1⊗e2 - e2⊗e1`.
std::string format_tensor(const Tensor2& t, const std::vector<std::string>& names = {});
std::string format_tensor(const Tensor3& t, const std::vector<std::string>& names = {});

}  // namespace alia
