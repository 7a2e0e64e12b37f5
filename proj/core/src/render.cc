// core/src/render.cc
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

#include "streampunct/render.h"

#include "streampunct/errors.h"

namespace streampunct {

std::string render_tagged(std::span<const Word> words,
                          std::span<const PunctTag> tags, bool capitalize) {
  if (words.size() != tags.size()) {
    throw InvalidArgument("render: words/tags length mismatch");
  }
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ' ';
    out += words[i].text();
    out += tag_symbol(tags[i]);
  }
  if (capitalize && !out.empty() && out[0] >= 'a' && out[0] <= 'z') {
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
  }
  return out;
}

std::string render_sentence(const TaggedSentence& sentence, bool capitalize) {
  return render_tagged(sentence.words(), sentence.tags(), capitalize);
}

}  // namespace streampunct
