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

#ifndef QUASAR_VOCAB_HPP
#define QUASAR_VOCAB_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace quasar {

using TokenId = std::int32_t;

// Bidirectional token <-> id map. The four control tokens always occupy
// ids 0-3; corpus tokens follow, ordered by descending frequency with ties
// broken lexicographically, so a vocabulary is a pure function of the token
// multiset and the frequency cutoff.
class Vocabulary {
 public:
  static constexpr TokenId kBos = 0;
  static constexpr TokenId kEos = 1;
  static constexpr TokenId kUnk = 2;
  static constexpr TokenId kPad = 3;

  static const char* bos_token() { return "<s>"; }
  static const char* eos_token() { return "</s>"; }
  static const char* unk_token() { return "<unk>"; }
  static const char* pad_token() { return "<pad>"; }

  // Reserved tokens only.
  Vocabulary();

  static Vocabulary build(const std::vector<std::vector<std::string>>& sequences,
                          std::size_t min_count);

  // Appends the token if absent; returns its id either way.
  TokenId add(const std::string& token);

  bool contains(const std::string& token) const;

  // Id of the token, or kUnk when absent.
  TokenId id_or_unk(const std::string& token) const;

  // Token string for an id; out-of-range is a hard error.
  const std::string& token(TokenId id) const;

  std::size_t size() const { return tokens_.size(); }

  std::vector<TokenId> encode(const std::vector<std::string>& tokens) const;
  std::vector<std::string> decode(const std::vector<TokenId>& ids) const;

  const std::vector<std::string>& tokens() const { return tokens_; }

  bool operator==(const Vocabulary& other) const {
    return tokens_ == other.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> index_;
};

}  // namespace quasar

#endif  // QUASAR_VOCAB_HPP
