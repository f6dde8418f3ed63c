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

#include "quasar/embedding.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace quasar {

Vec EmbeddingTable::row_vec(TokenId id) const {
  return weights.row_vec(static_cast<std::size_t>(id));
}

std::span<double> EmbeddingTable::row(TokenId id) {
  return weights.row(static_cast<std::size_t>(id));
}

std::span<const double> EmbeddingTable::row(TokenId id) const {
  return weights.row(static_cast<std::size_t>(id));
}

EmbeddingTable init_embeddings(const Vocabulary& vocab, std::size_t d,
                               double scale, Rng& rng) {
  require(d >= 1, ErrorCode::kInvalidArgument,
          "init_embeddings: dimension must be >= 1");
  require(scale > 0.0, ErrorCode::kInvalidArgument,
          "init_embeddings: scale must be positive");
  EmbeddingTable table{vocab, Mat(vocab.size(), d)};
  for (double& w : table.weights.data()) w = rng.uniform(-scale, scale);
  return table;
}

PretrainedLoadStats load_pretrained(EmbeddingTable& table, std::istream& in) {
  PretrainedLoadStats stats;
  std::set<TokenId> touched;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string token;
    fields >> token;
    if (token.empty()) continue;
    Vec row;
    row.reserve(table.dim());
    double value = 0.0;
    while (fields >> value) row.push_back(value);
    require(row.size() == table.dim(), ErrorCode::kDimensionMismatch,
            "load_pretrained: line " + std::to_string(line_no) + " has " +
                std::to_string(row.size()) + " values, expected " +
                std::to_string(table.dim()));
    require(all_finite(row), ErrorCode::kNumeric,
            "load_pretrained: non-finite value at line " +
                std::to_string(line_no));
    if (!table.vocab.contains(token)) {
      ++stats.unknown_tokens_skipped;
      continue;
    }
    const TokenId id = table.vocab.id_or_unk(token);
    table.weights.set_row(static_cast<std::size_t>(id), row);
    touched.insert(id);
  }
  stats.rows_overwritten = touched.size();
  return stats;
}

PretrainedLoadStats load_pretrained(EmbeddingTable& table,
                                    const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::kIo, "load_pretrained: cannot open " + path);
  return load_pretrained(table, in);
}

}  // namespace quasar
