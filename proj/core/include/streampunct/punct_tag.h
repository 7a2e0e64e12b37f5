// streampunct/punct_tag.h
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

#ifndef STREAMPUNCT_PUNCT_TAG_H_
#define STREAMPUNCT_PUNCT_TAG_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace streampunct {

// Punctuation attached to the end of a word. The numeric order is also the
// tie-break order used by classifiers (O wins ties).
enum class PunctTag : std::uint8_t {
  kO = 0,
  kComma = 1,
  kPeriod = 2,
  kQMark = 3,
};

inline constexpr std::size_t kNumTags = 4;

inline constexpr std::array<PunctTag, kNumTags> kAllTags = {
    PunctTag::kO, PunctTag::kComma, PunctTag::kPeriod, PunctTag::kQMark};

constexpr std::size_t tag_index(PunctTag t) {
  return static_cast<std::size_t>(t);
}

// PERIOD and QMARK end a sentence.
constexpr bool is_terminal(PunctTag t) {
  return t == PunctTag::kPeriod || t == PunctTag::kQMark;
}

// Serialized name: "O", "COMMA", "PERIOD", "QMARK".
std::string_view tag_name(PunctTag t);

// Inverse of tag_name. Throws FormatError on unknown names.
PunctTag parse_tag(std::string_view name);

// The character appended to a word carrying this tag ("" for O).
std::string_view tag_symbol(PunctTag t);

// Maps '.', ',', '?' to their tag; anything else to O.
PunctTag tag_from_symbol(char c);

}  // namespace streampunct

#endif  // STREAMPUNCT_PUNCT_TAG_H_
