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

#include "quasar/vocab.hpp"

#include <algorithm>
#include <map>

#include "quasar/error.hpp"

namespace quasar {

Vocabulary::Vocabulary() {
  add(bos_token());
  add(eos_token());
  add(unk_token());
  add(pad_token());
}

Vocabulary Vocabulary::build(
    const std::vector<std::vector<std::string>>& sequences,
    std::size_t min_count) {
  require(min_count >= 1, ErrorCode::kInvalidArgument,
          "build: min_count must be >= 1");
  // Ordered map so the (count desc, token asc) sort below never depends on
  // hash iteration order.
  std::map<std::string, std::size_t> counts;
  for (const auto& seq : sequences) {
    for (const auto& tok : seq) ++counts[tok];
  }
  std::vector<std::pair<std::string, std::size_t>> kept;
  for (const auto& [tok, count] : counts) {
    if (count >= min_count) kept.emplace_back(tok, count);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  Vocabulary vocab;
  for (const auto& [tok, count] : kept) vocab.add(tok);
  return vocab;
}

TokenId Vocabulary::add(const std::string& token) {
  auto it = index_.find(token);
  if (it != index_.end()) return it->second;
  const TokenId id = static_cast<TokenId>(tokens_.size());
  tokens_.push_back(token);
  index_.emplace(token, id);
  return id;
}

bool Vocabulary::contains(const std::string& token) const {
  return index_.count(token) > 0;
}

TokenId Vocabulary::id_or_unk(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? kUnk : it->second;
}

const std::string& Vocabulary::token(TokenId id) const {
  require(id >= 0 && static_cast<std::size_t>(id) < tokens_.size(),
          ErrorCode::kInvalidArgument, "token id out of range");
  return tokens_[static_cast<std::size_t>(id)];
}

std::vector<TokenId> Vocabulary::encode(
    const std::vector<std::string>& tokens) const {
  std::vector<TokenId> ids;
  ids.reserve(tokens.size());
  for (const auto& tok : tokens) ids.push_back(id_or_unk(tok));
  return ids;
}

std::vector<std::string> Vocabulary::decode(
    const std::vector<TokenId>& ids) const {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (TokenId id : ids) out.push_back(token(id));
  return out;
}

}  // namespace quasar
