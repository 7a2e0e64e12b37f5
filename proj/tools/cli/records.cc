// tools/cli/records.cc
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

#include "records.h"

#include <nlohmann/json.hpp>

#include "streampunct/errors.h"
#include "streampunct/render.h"

namespace streampunct::cli {

using json = nlohmann::ordered_json;

namespace {

json parse_object(std::string_view line) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw FormatError("record is not a JSON object");
  }
  return j;
}

std::string session_of(const json& j) {
  if (!j.contains("session_id") || !j["session_id"].is_string()) {
    throw FormatError("record lacks a string session_id");
  }
  return j["session_id"].get<std::string>();
}

std::vector<Word> words_of(const json& j) {
  if (!j.contains("words") || !j["words"].is_array()) {
    throw FormatError("record lacks a words array");
  }
  std::vector<Word> words;
  for (const auto& w : j["words"]) {
    if (!w.is_string()) throw FormatError("word entry is not a string");
    auto text = w.get<std::string>();
    auto why = Word::check(text);
    if (!why.empty()) throw FormatError(why);
    words.emplace_back(std::move(text));
  }
  return words;
}

}  // namespace

std::string segment_to_record(const Segment& segment) {
  json j;
  j["session_id"] = segment.session_id;
  j["seq_no"] = segment.seq_no;
  j["words"] = json::array();
  for (const auto& w : segment.words) j["words"].push_back(w.text());
  return j.dump();
}

Segment segment_from_record(std::string_view line) {
  json j = parse_object(line);
  Segment s;
  s.session_id = session_of(j);
  if (!j.contains("seq_no") || !j["seq_no"].is_number_unsigned()) {
    throw FormatError("record lacks a non-negative integer seq_no");
  }
  s.seq_no = j["seq_no"].get<std::uint64_t>();
  s.words = words_of(j);
  return s;
}

std::string sentence_to_record(const std::string& session_id,
                               const TaggedSentence& sentence, bool capitalize) {
  json j;
  j["session_id"] = session_id;
  j["text"] = render_sentence(sentence, capitalize);
  j["words"] = json::array();
  j["tags"] = json::array();
  for (const auto& it : sentence.items) {
    j["words"].push_back(it.word.text());
    j["tags"].push_back(tag_name(it.tag));
  }
  j["forced"] = sentence.forced;
  return j.dump();
}

SentenceRecord sentence_from_record(std::string_view line) {
  json j = parse_object(line);
  SentenceRecord r;
  r.session_id = session_of(j);
  auto words = words_of(j);
  if (!j.contains("tags") || !j["tags"].is_array()) {
    throw FormatError("record lacks a tags array");
  }
  std::vector<PunctTag> tags;
  for (const auto& t : j["tags"]) {
    if (!t.is_string()) throw FormatError("tag entry is not a string");
    tags.push_back(parse_tag(t.get<std::string>()));
  }
  if (tags.size() != words.size()) {
    throw FormatError("sentence record has " + std::to_string(words.size()) +
                      " words but " + std::to_string(tags.size()) + " tags");
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    r.sentence.items.push_back({words[i], tags[i]});
  }
  if (!r.sentence.items.empty()) r.sentence.terminal = r.sentence.items.back().tag;
  if (j.contains("forced") && j["forced"].is_boolean()) {
    r.sentence.forced = j["forced"].get<bool>();
  }
  return r;
}

}  // namespace streampunct::cli
