// core/src/oracle_tagger.cc
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

#include "streampunct/oracle_tagger.h"

#include <utility>

#include "streampunct/errors.h"

namespace streampunct {

OracleTagger::OracleTagger(std::vector<Word> words, std::vector<PunctTag> tags)
    : words_(std::move(words)), tags_(std::move(tags)) {
  if (words_.size() != tags_.size()) {
    throw InvalidArgument("OracleTagger: words/tags length mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    index_[words_[i].text()].push_back(i);
  }
}

OracleTagger::OracleTagger(const TrainingRow& row)
    : OracleTagger(row.words, row.tags) {}

OracleTagger OracleTagger::from_rows(std::span<const TrainingRow> rows) {
  std::vector<Word> words;
  std::vector<PunctTag> tags;
  for (const auto& r : rows) {
    if (r.words.size() != r.tags.size()) {
      throw InvalidArgument("OracleTagger: row '" + r.source_id +
                            "' words/tags length mismatch");
    }
    words.insert(words.end(), r.words.begin(), r.words.end());
    tags.insert(tags.end(), r.tags.begin(), r.tags.end());
  }
  return OracleTagger(std::move(words), std::move(tags));
}

bool OracleTagger::matches_at(std::span<const Word> window,
                              std::size_t start) const {
  if (start > words_.size() || window.size() > words_.size() - start) {
    return false;
  }
  for (std::size_t k = 0; k < window.size(); ++k) {
    if (words_[start + k] != window[k]) return false;
  }
  return true;
}

std::vector<std::size_t> OracleTagger::occurrences(
    std::span<const Word> window) const {
  std::vector<std::size_t> out;
  if (window.empty()) return out;
  auto it = index_.find(window.front().text());
  if (it == index_.end()) return out;
  for (std::size_t start : it->second) {
    if (matches_at(window, start)) out.push_back(start);
  }
  return out;
}

std::vector<PunctTag> OracleTagger::do_tag(std::span<const Word> words,
                                           const TagContext& context) const {
  if (context.stream_offset && matches_at(words, *context.stream_offset)) {
    auto first = tags_.begin() + static_cast<std::ptrdiff_t>(*context.stream_offset);
    return std::vector<PunctTag>(first, first + static_cast<std::ptrdiff_t>(words.size()));
  }
  std::vector<PunctTag> out(words.size(), PunctTag::kO);
  auto starts = occurrences(words);
  if (starts.empty()) return out;
  for (std::size_t k = 0; k < words.size(); ++k) {
    PunctTag t = tags_[starts.front() + k];
    bool agree = true;
    for (std::size_t s : starts) {
      if (tags_[s + k] != t) {
        agree = false;
        break;
      }
    }
    out[k] = agree ? t : PunctTag::kO;
  }
  return out;
}

}  // namespace streampunct
