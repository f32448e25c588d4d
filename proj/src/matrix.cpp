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

#include "diar/matrix.hpp"

#include <cmath>
#include <string>

#include "diar/errors.hpp"
#include "diar/kernels.hpp"
#include "diar/rng.hpp"

namespace diar {

namespace {

void check_shape(bool ok, const char* what) {
  if (!ok) throw ShapeError(std::string("shape mismatch in ") + what);
}

}  // namespace

bool Matrix::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

Matrix Matrix::random_uniform(std::size_t rows, std::size_t cols, Rng& rng,
                              double lo, double hi) {
  Matrix m(rows, cols);
  for (double& v : m.data_) v = rng.uniform(lo, hi);
  return m;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.rows());
  matmul_nt_acc(a, b, c);
  return c;
}

void matmul_nt_acc(const Matrix& a, const Matrix& b, Matrix& c) {
  check_shape(a.cols() == b.cols() && c.rows() == a.rows() && c.cols() == b.rows(),
              "matmul_nt");
  const std::size_t k = a.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* ai = a.row(i);
    double* ci = c.row(i);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      ci[j] += kernels::dot(ai, b.row(j), k);
    }
  }
}

Matrix matmul_nn(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  matmul_nn_acc(a, b, c);
  return c;
}

void matmul_nn_acc(const Matrix& a, const Matrix& b, Matrix& c) {
  check_shape(a.cols() == b.rows() && c.rows() == a.rows() && c.cols() == b.cols(),
              "matmul_nn");
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* ai = a.row(i);
    double* ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ai[k] != 0.0) kernels::axpy(ai[k], b.row(k), ci, n);
    }
  }
}

void matmul_tn_acc(const Matrix& a, const Matrix& b, Matrix& c) {
  check_shape(a.rows() == b.rows() && c.rows() == a.cols() && c.cols() == b.cols(),
              "matmul_tn");
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* ai = a.row(i);
    const double* bi = b.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ai[k] != 0.0) kernels::axpy(ai[k], bi, c.row(k), n);
    }
  }
}

Matrix affine_rows(const Matrix& x, const Matrix& w, const Matrix& b) {
  check_shape(x.cols() == w.cols() && b.rows() == 1 && b.cols() == w.rows(),
              "affine");
  Matrix y(x.rows(), w.rows());
  matmul_nt_acc(x, w, y);
  for (std::size_t t = 0; t < y.rows(); ++t) {
    double* yt = y.row(t);
    const double* bp = b.row(0);
    for (std::size_t j = 0; j < y.cols(); ++j) yt[j] += bp[j];
  }
  return y;
}

}  // namespace diar
