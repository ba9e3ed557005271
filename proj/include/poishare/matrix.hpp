// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POISHARE_MATRIX_HPP_
#define POISHARE_MATRIX_HPP_

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace poishare {

// Dense row-major square matrix.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim, double fill = 0.0) : dim_(dim), data_(dim * dim, fill) {}

  std::size_t dim() const { return dim_; }

  double& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  double operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * dim_, dim_}; }

  bool symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  double column_sum(std::size_t col) const {
    double s = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) s += (*this)(r, col);
    return s;
  }

  // Sum of all entries of the principal minor that keeps `indices`.
  double minor_sum(std::span<const std::size_t> indices) const {
    double s = 0.0;
    for (std::size_t i : indices)
      for (std::size_t j : indices) s += (*this)(i, j);
    return s;
  }

  double minor_trace(std::span<const std::size_t> indices) const {
    double s = 0.0;
    for (std::size_t i : indices) s += (*this)(i, i);
    return s;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

// Standard cubic product.
inline Matrix multiply(const Matrix& a, const Matrix& b) {
  assert(a.dim() == b.dim());
  const std::size_t n = a.dim();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

}  // namespace poishare

#endif  // POISHARE_MATRIX_HPP_
