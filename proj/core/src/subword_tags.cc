// core/src/subword_tags.cc
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

#include "streampunct/subword_tags.h"

#include <utility>

#include "streampunct/errors.h"

namespace streampunct {

std::vector<TaggedPiece> word_tags_to_subword_tags(
    std::span<const Word> words, std::span<const PunctTag> tags,
    const SubwordTokenizer& tokenizer, std::vector<std::size_t>* piece_counts) {
  if (words.size() != tags.size()) {
    throw InvalidArgument("word_tags_to_subword_tags: " +
                          std::to_string(words.size()) + " words but " +
                          std::to_string(tags.size()) + " tags");
  }
  if (words.empty()) {
    throw InvalidArgument("word_tags_to_subword_tags: empty input");
  }
  std::vector<TaggedPiece> out;
  if (piece_counts) piece_counts->clear();
  for (std::size_t w = 0; w < words.size(); ++w) {
    auto pieces = tokenizer.tokenize(words[w]);
    if (pieces.empty()) {
      throw InvalidArgument("tokenizer returned no pieces for '" +
                            words[w].text() + "'");
    }
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      PunctTag t = k + 1 == pieces.size() ? tags[w] : PunctTag::kO;
      out.push_back({std::move(pieces[k]), t});
    }
    if (piece_counts) piece_counts->push_back(pieces.size());
  }
  return out;
}

std::vector<PunctTag> subword_tags_to_word_tags(
    std::span<const TaggedPiece> pieces,
    std::span<const std::size_t> piece_counts) {
  std::vector<PunctTag> out;
  out.reserve(piece_counts.size());
  std::size_t pos = 0;
  for (std::size_t count : piece_counts) {
    if (count == 0) {
      throw InvalidArgument("subword_tags_to_word_tags: zero-piece word");
    }
    if (count > pieces.size() - pos) {
      throw InvalidArgument(
          "subword_tags_to_word_tags: boundaries exceed piece count");
    }
    pos += count;
    out.push_back(pieces[pos - 1].tag);
  }
  if (pos != pieces.size()) {
    throw InvalidArgument(
        "subword_tags_to_word_tags: boundaries cover " + std::to_string(pos) +
        " of " + std::to_string(pieces.size()) + " pieces");
  }
  return out;
}

}  // namespace streampunct
