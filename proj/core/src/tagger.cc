// core/src/tagger.cc
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

#include "streampunct/tagger.h"

#include <string>

#include "streampunct/errors.h"

namespace streampunct {

std::vector<PunctTag> Tagger::tag(std::span<const Word> words,
                                  const TagContext& context) const {
  if (words.empty()) return {};
  auto tags = do_tag(words, context);
  if (tags.size() != words.size()) {
    throw Error("tagger returned " + std::to_string(tags.size()) +
                " tags for " + std::to_string(words.size()) + " words");
  }
  return tags;
}

std::vector<PunctTag> AllOTagger::do_tag(std::span<const Word> words,
                                         const TagContext&) const {
  return std::vector<PunctTag>(words.size(), PunctTag::kO);
}

}  // namespace streampunct
