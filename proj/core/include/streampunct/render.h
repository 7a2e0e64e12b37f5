// streampunct/render.h
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

#ifndef STREAMPUNCT_RENDER_H_
#define STREAMPUNCT_RENDER_H_

#include <string>

#include "streampunct/types.h"

namespace streampunct {

// Display form of a sentence: words joined by single spaces, each followed
// directly by its tag symbol. With `capitalize`, an initial ASCII letter is
// upper-cased; a leading digit or other symbol is left alone.
std::string render_sentence(const TaggedSentence& sentence, bool capitalize);

// Same rendering for raw parallel slices (no sentence invariants required).
std::string render_tagged(std::span<const Word> words,
                          std::span<const PunctTag> tags, bool capitalize);

}  // namespace streampunct

#endif  // STREAMPUNCT_RENDER_H_
