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

#ifndef QUASAR_CORPUS_HPP
#define QUASAR_CORPUS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace quasar {

// Aligned question/query pairs. The interchange format is line-oriented
// UTF-8 TSV: question TAB query, '#' comments and blank lines skipped.
// Queries are flat token sequences; any tree structure stays implicit.
struct ParallelPair {
  std::vector<std::string> question;
  std::vector<std::string> query;
};

struct ParallelCorpus {
  std::vector<ParallelPair> pairs;
  std::string provenance;  // source path or "synthetic(<seed>)"

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
};

// Lowercases ASCII letters, splits on whitespace, strips leading/trailing
// ASCII punctuation except apostrophes. Tokens that strip to nothing are
// dropped; an empty result is the caller's error to raise.
std::vector<std::string> tokenize_question(std::string_view text);

// Splits on whitespace and breaks '(' ')' ',' out as standalone tokens,
// case preserved. Unbalanced parentheses only set *balanced to false; the
// models treat queries as opaque token sequences.
std::vector<std::string> tokenize_query(std::string_view text,
                                        bool* balanced = nullptr);

struct CorpusLineIssue {
  std::size_t line_no = 0;
  std::string message;
};

ParallelCorpus load_parallel(std::istream& in, const std::string& provenance,
                             std::vector<CorpusLineIssue>* issues = nullptr);

// Hard error when the file is unreadable or contains zero valid pairs; the
// error message then lists the per-line diagnostics.
ParallelCorpus load_parallel(const std::string& path);

// Inverse of load_parallel up to whitespace: tokens joined by single spaces,
// TAB between question and query.
void write_parallel(const ParallelCorpus& corpus, std::ostream& out);
void write_parallel(const ParallelCorpus& corpus, const std::string& path);

struct SplitRatios {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
};

// Seeded shuffle followed by a contiguous cut; each realized size is within
// one pair of the exact ratio. An avoidably empty split is a hard error.
std::array<ParallelCorpus, 3> split(const ParallelCorpus& corpus,
                                    SplitRatios ratios, std::uint64_t seed);

// Desk-scale stand-in for a GeoQuery-style corpus: every relation/entity
// combination yields one pair, question template alternating between
// "what REL ENT" and "who REL ENT", query "answer ( REL ( ENT ) )".
// Pair order is shuffled by the seed.
ParallelCorpus generate_toy_corpus(std::size_t n_entities,
                                   std::size_t n_relations,
                                   std::uint64_t seed);

// FNV-1a over the token content; recorded in model archives so a model can
// be traced back to its training data.
std::uint64_t corpus_hash(const ParallelCorpus& corpus);

}  // namespace quasar

#endif  // QUASAR_CORPUS_HPP
