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

#include "quasar/composition.hpp"

#include <cmath>

namespace quasar {

CompositionMode composition_mode_from_string(const std::string& name) {
  if (name == "additive") return CompositionMode::kAdditive;
  if (name == "bigram") return CompositionMode::kBigram;
  fail(ErrorCode::kConfig, "unknown composition mode '" + name +
                               "' (expected additive or bigram)");
}

const char* composition_mode_name(CompositionMode mode) {
  return mode == CompositionMode::kAdditive ? "additive" : "bigram";
}

namespace {

void check_inputs(const CompositionFn& fn, const std::vector<Vec>& xs) {
  require(!xs.empty(), ErrorCode::kInvalidArgument,
          "compose: empty input sequence");
  for (const Vec& x : xs) {
    require(x.size() == fn.dim, ErrorCode::kDimensionMismatch,
            "compose: input dimension does not match composition dimension");
  }
}

}  // namespace

Vec compose(const CompositionFn& fn, const std::vector<Vec>& xs) {
  check_inputs(fn, xs);
  Vec out(fn.dim, 0.0);
  if (fn.mode == CompositionMode::kAdditive) {
    for (const Vec& x : xs) axpy(1.0, x, out);
    return out;
  }
  if (xs.size() == 1) {
    for (std::size_t j = 0; j < fn.dim; ++j) out[j] = std::tanh(xs[0][j]);
    return out;
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    for (std::size_t j = 0; j < fn.dim; ++j) {
      out[j] += std::tanh(xs[i][j] + xs[i + 1][j]);
    }
  }
  return out;
}

std::vector<Vec> compose_backward(const CompositionFn& fn,
                                  const std::vector<Vec>& xs,
                                  const Vec& upstream) {
  check_inputs(fn, xs);
  require(upstream.size() == fn.dim, ErrorCode::kDimensionMismatch,
          "compose_backward: upstream dimension mismatch");
  std::vector<Vec> grads(xs.size(), Vec(fn.dim, 0.0));
  if (fn.mode == CompositionMode::kAdditive) {
    for (Vec& g : grads) g = upstream;
    return grads;
  }
  if (xs.size() == 1) {
    for (std::size_t j = 0; j < fn.dim; ++j) {
      const double t = std::tanh(xs[0][j]);
      grads[0][j] = (1.0 - t * t) * upstream[j];
    }
    return grads;
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    for (std::size_t j = 0; j < fn.dim; ++j) {
      const double t = std::tanh(xs[i][j] + xs[i + 1][j]);
      const double local = (1.0 - t * t) * upstream[j];
      grads[i][j] += local;
      grads[i + 1][j] += local;
    }
  }
  return grads;
}

}  // namespace quasar
