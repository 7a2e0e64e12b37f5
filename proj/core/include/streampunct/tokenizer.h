// streampunct/tokenizer.h
//
// Copyright 2026  The streampunct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef STREAMPUNCT_TOKENIZER_H_
#define STREAMPUNCT_TOKENIZER_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "streampunct/types.h"

namespace streampunct {

// Splits a word into subword pieces. Implementations must be deterministic,
// return at least one piece, and satisfy detokenize(tokenize(w)) == w.text().
class SubwordTokenizer {
 public:
  virtual ~SubwordTokenizer() = default;

  virtual std::vector<std::string> tokenize(const Word& word) const = 0;
  virtual std::string detokenize(std::span<const std::string> pieces) const = 0;
};

// Every word is one piece. Used when no vocabulary is configured, which makes
// token budgets count words.
class WholeWordTokenizer final : public SubwordTokenizer {
 public:
  std::vector<std::string> tokenize(const Word& word) const override;
  std::string detokenize(std::span<const std::string> pieces) const override;
};

// Greedy longest-match over a fixed vocabulary, WordPiece style: pieces after
// the first carry the "##" continuation marker. Characters not covered by the
// vocabulary fall back to single UTF-8 code points, so tokenization is total.
class GreedyTokenizer final : public SubwordTokenizer {
 public:
  static constexpr std::string_view kContinuation = "##";

  // `vocab` holds word-initial pieces as-is and continuation pieces with the
  // "##" prefix.
  explicit GreedyTokenizer(std::vector<std::string> vocab);

  // One piece per line; anything after a tab is ignored (counts, ids).
  static GreedyTokenizer from_file(const std::filesystem::path& path);

  std::vector<std::string> tokenize(const Word& word) const override;
  std::string detokenize(std::span<const std::string> pieces) const override;

  std::size_t vocab_size() const { return vocab_.size(); }

 private:
  std::unordered_set<std::string> vocab_;
  std::size_t max_piece_bytes_ = 0;
};

}  // namespace streampunct

#endif  // STREAMPUNCT_TOKENIZER_H_
