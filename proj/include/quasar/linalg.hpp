// Copyright 2026 The Quasar Authors
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

#ifndef QUASAR_LINALG_HPP
#define QUASAR_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "quasar/error.hpp"

namespace quasar {

// All model math runs on 64-bit doubles. Embeddings and latents are plain
// std::vector<double>; shapes are validated by the free functions below.
using Vec = std::vector<double>;

// Dense row-major matrix. Rows of embedding tables and the CNLM context
// transforms live here; no sparse storage, no BLAS.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) {
    require(r < rows_, ErrorCode::kInvalidArgument, "matrix row out of range");
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> row(std::size_t r) const {
    require(r < rows_, ErrorCode::kInvalidArgument, "matrix row out of range");
    return {data_.data() + r * cols_, cols_};
  }
  Vec row_vec(std::size_t r) const {
    auto s = row(r);
    return Vec(s.begin(), s.end());
  }
  void set_row(std::size_t r, std::span<const double> values);

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  void fill(double value) { data_.assign(data_.size(), value); }

  bool operator==(const Mat& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

bool all_finite(std::span<const double> xs);

// Σ u_i v_i. Dimension mismatch is a hard error.
double dot(const Vec& u, const Vec& v);

// ‖u − v‖².
double squared_euclidean(const Vec& u, const Vec& v);

// M v with cols(M) = dim(v).
Vec matvec(const Mat& m, const Vec& v);

// Mᵀ v with rows(M) = dim(v).
Vec matTvec(const Mat& m, const Vec& v);

// y += a x.
void axpy(double a, const Vec& x, Vec& y);

// M += a u vᵀ.
void add_outer(Mat& m, double a, const Vec& u, const Vec& v);

// log Σ exp(x_i), max-shifted so inputs of magnitude ~1e3 stay finite.
// Empty input is a hard error.
double log_sum_exp(std::span<const double> xs);

}  // namespace quasar

#endif  // QUASAR_LINALG_HPP
