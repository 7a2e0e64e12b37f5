// streampunct/types.h
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

#ifndef STREAMPUNCT_TYPES_H_
#define STREAMPUNCT_TYPES_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "streampunct/punct_tag.h"

namespace streampunct {

// One spoken-form word. The text is non-empty, has no whitespace and never
// ends in '.', ',' or '?': trailing punctuation lives in tags. Mid-word
// periods, hyphens and apostrophes are allowed ("u.s", "well-known").
class Word {
 public:
  // Throws InvalidArgument if `text` violates the invariants above.
  explicit Word(std::string text);

  const std::string& text() const { return text_; }

  // Returns an empty string if `text` is a valid word, else the reason.
  static std::string check(std::string_view text);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string text_;
};

// Convenience for tests and examples: {"it", "can", "happen"}.
std::vector<Word> make_words(std::initializer_list<std::string_view> texts);
std::vector<Word> make_words(std::span<const std::string> texts);

// Splits on ASCII whitespace and builds words; throws like Word's ctor.
std::vector<Word> split_words(std::string_view text);

// A batch of words exactly as an ASR decoder produced it.
struct Segment {
  std::string session_id;
  std::uint64_t seq_no = 0;
  std::vector<Word> words;
};

struct TaggedWord {
  Word word;
  PunctTag tag = PunctTag::kO;

  friend bool operator==(const TaggedWord&, const TaggedWord&) = default;
};

// A finalized sentence. `terminal` mirrors the last item's tag; `forced`
// marks sentences closed by a flush or overflow rather than by the model.
struct TaggedSentence {
  std::vector<TaggedWord> items;
  PunctTag terminal = PunctTag::kPeriod;
  bool forced = false;

  std::vector<PunctTag> tags() const;
  std::vector<Word> words() const;

  friend bool operator==(const TaggedSentence&, const TaggedSentence&) =
      default;
};

// Spoken-form words with gold tags, one per corpus paragraph.
struct TrainingRow {
  std::vector<Word> words;
  std::vector<PunctTag> tags;
  std::string source_id;

  friend bool operator==(const TrainingRow&, const TrainingRow&) = default;
};

// Builds a sentence from parallel word/tag slices. If `forced` and the last
// tag is not terminal, it is rewritten to `forced_terminal`. Throws
// InvalidArgument when lengths mismatch, the slice is empty, a non-final tag
// is terminal, or an unforced sentence lacks a terminal tag.
TaggedSentence make_sentence(std::span<const Word> words,
                             std::span<const PunctTag> tags, bool forced,
                             PunctTag forced_terminal = PunctTag::kPeriod);

// Returns an empty string if all TaggedSentence invariants hold.
std::string check_sentence(const TaggedSentence& sentence);

}  // namespace streampunct

#endif  // STREAMPUNCT_TYPES_H_
