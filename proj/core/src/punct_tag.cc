// core/src/punct_tag.cc
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

#include "streampunct/punct_tag.h"

#include <string>

#include "streampunct/errors.h"

namespace streampunct {

std::string_view tag_name(PunctTag t) {
  switch (t) {
    case PunctTag::kO:
      return "O";
    case PunctTag::kComma:
      return "COMMA";
    case PunctTag::kPeriod:
      return "PERIOD";
    case PunctTag::kQMark:
      return "QMARK";
  }
  return "O";
}

PunctTag parse_tag(std::string_view name) {
  for (PunctTag t : kAllTags) {
    if (tag_name(t) == name) return t;
  }
  throw FormatError("unknown punctuation tag '" + std::string(name) + "'");
}

std::string_view tag_symbol(PunctTag t) {
  switch (t) {
    case PunctTag::kO:
      return "";
    case PunctTag::kComma:
      return ",";
    case PunctTag::kPeriod:
      return ".";
    case PunctTag::kQMark:
      return "?";
  }
  return "";
}

PunctTag tag_from_symbol(char c) {
  switch (c) {
    case ',':
      return PunctTag::kComma;
    case '.':
      return PunctTag::kPeriod;
    case '?':
      return PunctTag::kQMark;
    default:
      return PunctTag::kO;
  }
}

}  // namespace streampunct
