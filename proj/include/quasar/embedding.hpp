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

#ifndef QUASAR_EMBEDDING_HPP
#define QUASAR_EMBEDDING_HPP

#include <iosfwd>
#include <string>

#include "quasar/linalg.hpp"
#include "quasar/rng.hpp"
#include "quasar/vocab.hpp"

namespace quasar {

// One |V| x d lexicon. Houses the question and query embedding tables of the
// alignment stage and doubles as the initializer for the generator's
// vocabulary matrix.
struct EmbeddingTable {
  Vocabulary vocab;
  Mat weights;  // |V| x d

  std::size_t dim() const { return weights.cols(); }
  Vec row_vec(TokenId id) const;
  std::span<double> row(TokenId id);
  std::span<const double> row(TokenId id) const;
};

// Entries i.i.d. uniform in [-scale, scale], drawn row-major so the table is
// a pure function of (vocab, d, scale, rng state).
EmbeddingTable init_embeddings(const Vocabulary& vocab, std::size_t d,
                               double scale, Rng& rng);

struct PretrainedLoadStats {
  std::size_t rows_overwritten = 0;
  std::size_t unknown_tokens_skipped = 0;
};

// Text interchange: one token per line followed by d whitespace-separated
// decimals, UTF-8. Rows for tokens present in both the file and the vocab are
// overwritten; unknown tokens are skipped and counted; a row of the wrong
// width is a hard error.
PretrainedLoadStats load_pretrained(EmbeddingTable& table, std::istream& in);
PretrainedLoadStats load_pretrained(EmbeddingTable& table,
                                    const std::string& path);

}  // namespace quasar

#endif  // QUASAR_EMBEDDING_HPP
