#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "semidirect/rational.hpp"

namespace semidirect {

/// Dense three-index tensor of rationals, used for structure constants and
/// module actions.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
      : dims_{d0, d1, d2}, data_(d0 * d1 * d2) {}

  const std::array<std::size_t, 3>& dims() const { return dims_; }
  std::size_t dim(std::size_t axis) const { return dims_[axis]; }
  std::size_t size() const { return data_.size(); }

  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * dims_[1] + j) * dims_[2] + k];
  }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dims_[1] + j) * dims_[2] + k];
  }

  bool is_zero() const;

  /// sum_{i,j} x_i y_j T[i][j][*]
  Vector contract(const Vector& x, const Vector& y) const;

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::array<std::size_t, 3> dims_{0, 0, 0};
  std::vector<Rational> data_;
};

}  // namespace semidirect
