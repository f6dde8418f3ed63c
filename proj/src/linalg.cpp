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

#include "quasar/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace quasar {

void Mat::set_row(std::size_t r, std::span<const double> values) {
  require(values.size() == cols_, ErrorCode::kDimensionMismatch,
          "set_row: value count does not match column count");
  std::copy(values.begin(), values.end(), data_.begin() + r * cols_);
}

bool all_finite(std::span<const double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

double dot(const Vec& u, const Vec& v) {
  require(u.size() == v.size(), ErrorCode::kDimensionMismatch,
          "dot: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

double squared_euclidean(const Vec& u, const Vec& v) {
  require(u.size() == v.size(), ErrorCode::kDimensionMismatch,
          "squared_euclidean: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - v[i];
    acc += d * d;
  }
  return acc;
}

Vec matvec(const Mat& m, const Vec& v) {
  require(m.cols() == v.size(), ErrorCode::kDimensionMismatch,
          "matvec: dimension mismatch");
  Vec out(m.rows(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double acc = 0.0;
    auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

Vec matTvec(const Mat& m, const Vec& v) {
  require(m.rows() == v.size(), ErrorCode::kDimensionMismatch,
          "matTvec: dimension mismatch");
  Vec out(m.cols(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    const double vr = v[r];
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += row[c] * vr;
  }
  return out;
}

void axpy(double a, const Vec& x, Vec& y) {
  require(x.size() == y.size(), ErrorCode::kDimensionMismatch,
          "axpy: dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

void add_outer(Mat& m, double a, const Vec& u, const Vec& v) {
  require(m.rows() == u.size() && m.cols() == v.size(),
          ErrorCode::kDimensionMismatch, "add_outer: dimension mismatch");
  for (std::size_t r = 0; r < u.size(); ++r) {
    auto row = m.row(r);
    const double au = a * u[r];
    for (std::size_t c = 0; c < v.size(); ++c) row[c] += au * v[c];
  }
}

double log_sum_exp(std::span<const double> xs) {
  require(!xs.empty(), ErrorCode::kInvalidArgument, "log_sum_exp: empty input");
  require(all_finite(xs), ErrorCode::kNumeric, "log_sum_exp: non-finite input");
  const double mx = *std::max_element(xs.begin(), xs.end());
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - mx);
  return mx + std::log(acc);
}

}  // namespace quasar
