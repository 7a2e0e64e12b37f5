// core/src/types.cc
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

#include "streampunct/types.h"

#include <algorithm>
#include <utility>

#include "streampunct/errors.h"

namespace streampunct {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

Word::Word(std::string text) : text_(std::move(text)) {
  std::string why = check(text_);
  if (!why.empty()) throw InvalidArgument(why);
}

std::string Word::check(std::string_view text) {
  if (text.empty()) return "word text is empty";
  if (std::any_of(text.begin(), text.end(), is_space)) {
    return "word '" + std::string(text) + "' contains whitespace";
  }
  char last = text.back();
  if (last == '.' || last == ',' || last == '?') {
    return "word '" + std::string(text) + "' ends with punctuation";
  }
  return {};
}

std::vector<Word> make_words(std::initializer_list<std::string_view> texts) {
  std::vector<Word> out;
  out.reserve(texts.size());
  for (std::string_view t : texts) out.emplace_back(std::string(t));
  return out;
}

std::vector<Word> make_words(std::span<const std::string> texts) {
  std::vector<Word> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.emplace_back(t);
  return out;
}

std::vector<Word> split_words(std::string_view text) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) out.emplace_back(std::string(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

std::vector<PunctTag> TaggedSentence::tags() const {
  std::vector<PunctTag> out;
  out.reserve(items.size());
  for (const auto& it : items) out.push_back(it.tag);
  return out;
}

std::vector<Word> TaggedSentence::words() const {
  std::vector<Word> out;
  out.reserve(items.size());
  for (const auto& it : items) out.push_back(it.word);
  return out;
}

TaggedSentence make_sentence(std::span<const Word> words,
                             std::span<const PunctTag> tags, bool forced,
                             PunctTag forced_terminal) {
  if (words.size() != tags.size()) {
    throw InvalidArgument("make_sentence: words/tags length mismatch");
  }
  if (words.empty()) throw InvalidArgument("make_sentence: empty sentence");
  if (!is_terminal(forced_terminal)) {
    throw InvalidArgument("make_sentence: forced terminal must be terminal");
  }
  TaggedSentence s;
  s.forced = forced;
  s.items.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i + 1 < words.size() && is_terminal(tags[i])) {
      throw InvalidArgument("make_sentence: terminal tag before final word");
    }
    s.items.push_back({words[i], tags[i]});
  }
  PunctTag& last = s.items.back().tag;
  if (!is_terminal(last)) {
    if (!forced) {
      throw InvalidArgument("make_sentence: unforced sentence not terminated");
    }
    last = forced_terminal;
  }
  s.terminal = last;
  return s;
}

std::string check_sentence(const TaggedSentence& s) {
  if (s.items.empty()) return "sentence has no words";
  if (s.terminal != s.items.back().tag) {
    return "terminal differs from the last item's tag";
  }
  if (!s.forced && !is_terminal(s.terminal)) {
    return "unforced sentence without terminal tag";
  }
  for (std::size_t i = 0; i + 1 < s.items.size(); ++i) {
    if (is_terminal(s.items[i].tag)) return "terminal tag on non-final word";
  }
  return {};
}

}  // namespace streampunct
