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

#include "quasar/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "quasar/error.hpp"

namespace quasar {

std::vector<double> finite_diff_grad(const ScalarFn& f,
                                     std::vector<double> theta,
                                     double eps) {
  require(eps > 0.0, ErrorCode::kInvalidArgument,
          "finite_diff_grad: eps must be positive");
  std::vector<double> grad(theta.size(), 0.0);
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double saved = theta[i];
    theta[i] = saved + eps;
    const double plus = f(theta);
    theta[i] = saved - eps;
    const double minus = f(theta);
    theta[i] = saved;
    require(std::isfinite(plus) && std::isfinite(minus), ErrorCode::kNumeric,
            "finite_diff_grad: non-finite objective at probe");
    grad[i] = (plus - minus) / (2.0 * eps);
  }
  return grad;
}

double relative_error(double analytic, double numeric) {
  return std::abs(analytic - numeric) /
         std::max({1.0, std::abs(analytic), std::abs(numeric)});
}

double max_relative_error(std::span<const double> analytic,
                          std::span<const double> numeric) {
  require(analytic.size() == numeric.size(), ErrorCode::kDimensionMismatch,
          "max_relative_error: length mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    worst = std::max(worst, relative_error(analytic[i], numeric[i]));
  }
  return worst;
}

bool GradCheckReport::passed() const {
  return std::all_of(classes.begin(), classes.end(), [&](const auto& c) {
    return c.max_rel_error <= tolerance;
  });
}

std::string GradCheckReport::to_text() const {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific;
  for (const auto& c : classes) {
    out << (c.max_rel_error <= tolerance ? "ok   " : "FAIL ")
        << c.parameter_class << "  max_rel_err=" << c.max_rel_error
        << "  instances=" << c.instances << "\n";
  }
  out << "tolerance " << tolerance << "\n";
  return out.str();
}

}  // namespace quasar
