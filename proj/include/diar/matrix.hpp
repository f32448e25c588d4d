// Copyright 2026 The diarkit Authors
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

#pragma once

#include <cstddef>
#include <vector>

namespace diar {

class Rng;

// Dense row-major double matrix. The only tensor type in the toolkit;
// sequences are T x F with time along rows.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double* row(std::size_t r) { return data_.data() + r * cols_; }
  const double* row(std::size_t r) const { return data_.data() + r * cols_; }

  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }
  void zero() { fill(0.0); }

  bool same_shape(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  bool all_finite() const;

  // Entries drawn uniformly from [lo, hi).
  static Matrix random_uniform(std::size_t rows, std::size_t cols, Rng& rng,
                               double lo, double hi);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// c = a * b^T            a: m x k, b: n x k  ->  c: m x n
Matrix matmul_nt(const Matrix& a, const Matrix& b);
// c += a * b^T
void matmul_nt_acc(const Matrix& a, const Matrix& b, Matrix& c);
// c = a * b              a: m x k, b: k x n  ->  c: m x n
Matrix matmul_nn(const Matrix& a, const Matrix& b);
// c += a * b
void matmul_nn_acc(const Matrix& a, const Matrix& b, Matrix& c);
// c += a^T * b           a: m x k, b: m x n  ->  c: k x n
void matmul_tn_acc(const Matrix& a, const Matrix& b, Matrix& c);

// y = x * w^T + b (b broadcast over rows). w: out x in, b: 1 x out.
Matrix affine_rows(const Matrix& x, const Matrix& w, const Matrix& b);

}  // namespace diar
