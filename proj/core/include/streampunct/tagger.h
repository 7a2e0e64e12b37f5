// streampunct/tagger.h
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

#ifndef STREAMPUNCT_TAGGER_H_
#define STREAMPUNCT_TAGGER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "streampunct/types.h"

namespace streampunct {

// Optional facts the caller knows about the window being tagged. Taggers may
// ignore all of it; none of it is memory carried between calls.
struct TagContext {
  // Index of words[0] within the session's word stream.
  std::optional<std::size_t> stream_offset;
};

// A punctuation model: one tag per input word. Implementations must be
// deterministic and must not keep state across calls.
class Tagger {
 public:
  virtual ~Tagger() = default;

  // Returns exactly words.size() tags; throws Error if the implementation
  // breaks that contract. Empty input yields empty output without calling
  // the model.
  std::vector<PunctTag> tag(std::span<const Word> words,
                            const TagContext& context = {}) const;

 protected:
  virtual std::vector<PunctTag> do_tag(std::span<const Word> words,
                                       const TagContext& context) const = 0;
};

// Never punctuates.
class AllOTagger final : public Tagger {
 protected:
  std::vector<PunctTag> do_tag(std::span<const Word> words,
                               const TagContext& context) const override;
};

}  // namespace streampunct

#endif  // STREAMPUNCT_TAGGER_H_
