// streampunct/external_tagger.h
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

#ifndef STREAMPUNCT_EXTERNAL_TAGGER_H_
#define STREAMPUNCT_EXTERNAL_TAGGER_H_

#include <sys/types.h>

#include <cstdint>
#include <cstdio>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "streampunct/tagger.h"
#include "streampunct/types.h"

namespace streampunct {

// Line protocol spoken with an external tagging process:
//   request  {"id": <int>, "words": [<string>...]}
//   response {"id": <int>, "tags": [<tag name>...]}
//         or {"id": <int>, "error": <string>}
struct TagResponse {
  std::int64_t id = 0;
  std::vector<PunctTag> tags;
  std::optional<std::string> error;
};

std::string encode_tag_request(std::int64_t id, std::span<const Word> words);
std::string encode_tag_response(const TagResponse& response);
// Throws FormatError on malformed JSON, missing id, or unknown tag names.
TagResponse decode_tag_response(std::string_view line);

// Tags by delegating to a child process started with `/bin/sh -c command`.
// One request is in flight at a time; calls from several threads are
// serialized. Writing to a dead child raises ExternalTaggerError rather than
// SIGPIPE (SIGPIPE is ignored process-wide once the first instance starts).
class ExternalTagger final : public Tagger {
 public:
  explicit ExternalTagger(const std::string& command);
  ~ExternalTagger() override;

  ExternalTagger(const ExternalTagger&) = delete;
  ExternalTagger& operator=(const ExternalTagger&) = delete;

 protected:
  std::vector<PunctTag> do_tag(std::span<const Word> words,
                               const TagContext& context) const override;

 private:
  std::string command_;
  pid_t child_ = -1;
  int to_child_ = -1;
  std::FILE* from_child_ = nullptr;
  mutable std::int64_t next_id_ = 1;
  mutable std::mutex mu_;
};

}  // namespace streampunct

#endif  // STREAMPUNCT_EXTERNAL_TAGGER_H_
