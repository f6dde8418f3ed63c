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

#ifndef QUASAR_COMPOSITION_HPP
#define QUASAR_COMPOSITION_HPP

#include <string>
#include <vector>

#include "quasar/linalg.hpp"

namespace quasar {

// Order-sensitive composition reduces a nonempty embedding sequence to one
// latent vector. Two parameterless modes:
//   additive: sum of the inputs
//   bigram:   sum of tanh over adjacent input pairs, tanh(x1) for a
//             single-token sequence
// The question side defaults to additive and the query side to bigram.
enum class CompositionMode { kAdditive, kBigram };

CompositionMode composition_mode_from_string(const std::string& name);
const char* composition_mode_name(CompositionMode mode);

struct CompositionFn {
  CompositionMode mode = CompositionMode::kAdditive;
  std::size_t dim = 0;
};

Vec compose(const CompositionFn& fn, const std::vector<Vec>& xs);

// d(compose)/d(x_i) applied to the upstream vector, one gradient per input.
// Additive passes upstream through; bigram routes (1 - tanh^2) factors from
// each adjacent pair back to both members.
std::vector<Vec> compose_backward(const CompositionFn& fn,
                                  const std::vector<Vec>& xs,
                                  const Vec& upstream);

}  // namespace quasar

#endif  // QUASAR_COMPOSITION_HPP
