// tools/cli/records.h
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

#ifndef STREAMPUNCT_TOOLS_CLI_RECORDS_H_
#define STREAMPUNCT_TOOLS_CLI_RECORDS_H_

#include <string>
#include <string_view>

#include "streampunct/types.h"

namespace streampunct::cli {

// {"session_id": ..., "seq_no": ..., "words": [...]}
std::string segment_to_record(const Segment& segment);
// Throws FormatError on malformed records or invalid words.
Segment segment_from_record(std::string_view line);

// {"session_id", "text", "words", "tags", "forced"}
std::string sentence_to_record(const std::string& session_id,
                               const TaggedSentence& sentence, bool capitalize);

struct SentenceRecord {
  std::string session_id;
  TaggedSentence sentence;
};
// Only words/tags lengths are checked; sentence invariants are not enforced.
SentenceRecord sentence_from_record(std::string_view line);

}  // namespace streampunct::cli

#endif  // STREAMPUNCT_TOOLS_CLI_RECORDS_H_
