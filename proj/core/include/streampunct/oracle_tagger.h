// streampunct/oracle_tagger.h
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

#ifndef STREAMPUNCT_ORACLE_TAGGER_H_
#define STREAMPUNCT_ORACLE_TAGGER_H_

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "streampunct/tagger.h"
#include "streampunct/types.h"

namespace streampunct {

// Answers with the gold tags of a reference word stream.
//
// When the context carries a stream offset at which the window matches the
// reference, that slice's tags are returned verbatim. Otherwise the window is
// located by exact word lookup: if every occurrence agrees on a position's
// tag, that tag is returned; where occurrences disagree the answer is O, so
// an ambiguous window never yields a boundary the reference does not have
// there. A window absent from the reference is all O.
class OracleTagger final : public Tagger {
 public:
  OracleTagger(std::vector<Word> words, std::vector<PunctTag> tags);
  explicit OracleTagger(const TrainingRow& row);

  // Concatenates rows into one reference stream.
  static OracleTagger from_rows(std::span<const TrainingRow> rows);

  const std::vector<Word>& reference_words() const { return words_; }
  const std::vector<PunctTag>& reference_tags() const { return tags_; }

  // Start positions where `window` occurs in the reference.
  std::vector<std::size_t> occurrences(std::span<const Word> window) const;

 protected:
  std::vector<PunctTag> do_tag(std::span<const Word> words,
                               const TagContext& context) const override;

 private:
  bool matches_at(std::span<const Word> window, std::size_t start) const;

  std::vector<Word> words_;
  std::vector<PunctTag> tags_;
  std::unordered_map<std::string, std::vector<std::size_t>> index_;
};

}  // namespace streampunct

#endif  // STREAMPUNCT_ORACLE_TAGGER_H_
