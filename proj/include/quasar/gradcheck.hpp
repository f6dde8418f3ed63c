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

#ifndef QUASAR_GRADCHECK_HPP
#define QUASAR_GRADCHECK_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace quasar {

using ScalarFn = std::function<double(const std::vector<double>&)>;

// Central differences (f(θ+εe_i) − f(θ−εe_i)) / 2ε per coordinate. This is
// the oracle every analytic gradient in the project is checked against.
// Non-finite f at any probe is a hard error.
std::vector<double> finite_diff_grad(const ScalarFn& f,
                                     std::vector<double> theta,
                                     double eps = 1e-5);

// |a − b| / max(1, |a|, |b|).
double relative_error(double analytic, double numeric);

double max_relative_error(std::span<const double> analytic,
                          std::span<const double> numeric);

// One line of the gradcheck report: a parameter class and the worst relative
// error seen for it across all random instances.
struct GradCheckClassResult {
  std::string parameter_class;
  double max_rel_error = 0.0;
  std::size_t instances = 0;
};

struct GradCheckOptions {
  std::uint64_t seed = 7;
  std::size_t instances = 50;
  std::size_t dim = 4;
  std::size_t context_n = 3;
  double tolerance = 1e-4;
  double eps = 1e-5;
  // Test hook: adds a constant to one analytic gradient coordinate of every
  // class so the harness itself can be shown to catch a broken gradient.
  bool corrupt = false;
};

struct GradCheckReport {
  std::vector<GradCheckClassResult> classes;
  double tolerance = 0.0;
  bool passed() const;
  std::string to_text() const;
};

// Builds random small BiCVM and CNLM instances and compares every analytic
// gradient class against finite differences. Implemented in gradcheck.cpp
// next to the models it audits.
GradCheckReport run_gradcheck(const GradCheckOptions& options);

}  // namespace quasar

#endif  // QUASAR_GRADCHECK_HPP
