// streampunct/subword_tags.h
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

#ifndef STREAMPUNCT_SUBWORD_TAGS_H_
#define STREAMPUNCT_SUBWORD_TAGS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "streampunct/tokenizer.h"
#include "streampunct/types.h"

namespace streampunct {

struct TaggedPiece {
  std::string piece;
  PunctTag tag = PunctTag::kO;

  friend bool operator==(const TaggedPiece&, const TaggedPiece&) = default;
};

// Word-level tags to piece-level tags: the last piece of each word carries
// the word's tag, earlier pieces get O. If `piece_counts` is non-null it
// receives the number of pieces per word.
std::vector<TaggedPiece> word_tags_to_subword_tags(
    std::span<const Word> words, std::span<const PunctTag> tags,
    const SubwordTokenizer& tokenizer,
    std::vector<std::size_t>* piece_counts = nullptr);

// Piece-level tags back to word-level: each word takes the tag of its last
// piece, tags on earlier pieces are dropped.
std::vector<PunctTag> subword_tags_to_word_tags(
    std::span<const TaggedPiece> pieces,
    std::span<const std::size_t> piece_counts);

}  // namespace streampunct

#endif  // STREAMPUNCT_SUBWORD_TAGS_H_
