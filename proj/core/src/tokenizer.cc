// core/src/tokenizer.cc
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

#include "streampunct/tokenizer.h"

#include <algorithm>
#include <fstream>
#include <utility>

#include "streampunct/errors.h"

namespace streampunct {

namespace {

// Byte length of the UTF-8 sequence starting with `lead`; malformed lead
// bytes count as one byte so tokenization still makes progress.
std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

}  // namespace

std::vector<std::string> WholeWordTokenizer::tokenize(const Word& word) const {
  return {word.text()};
}

std::string WholeWordTokenizer::detokenize(
    std::span<const std::string> pieces) const {
  std::string out;
  for (const auto& p : pieces) out += p;
  return out;
}

GreedyTokenizer::GreedyTokenizer(std::vector<std::string> vocab) {
  for (auto& piece : vocab) {
    if (piece.empty() || piece == kContinuation) continue;
    max_piece_bytes_ = std::max(max_piece_bytes_, piece.size());
    vocab_.insert(std::move(piece));
  }
}

GreedyTokenizer GreedyTokenizer::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open vocabulary " + path.string());
  std::vector<std::string> vocab;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tab = line.find('\t');
    if (tab != std::string::npos) line.resize(tab);
    if (!line.empty()) vocab.push_back(line);
  }
  return GreedyTokenizer(std::move(vocab));
}

std::vector<std::string> GreedyTokenizer::tokenize(const Word& word) const {
  const std::string& text = word.text();
  std::vector<std::string> pieces;
  std::size_t pos = 0;
  std::string key;
  while (pos < text.size()) {
    const std::string_view prefix = pos == 0 ? "" : kContinuation;
    std::size_t best = 0;
    std::size_t longest =
        std::min(text.size() - pos, max_piece_bytes_ > prefix.size()
                                        ? max_piece_bytes_ - prefix.size()
                                        : std::size_t{0});
    for (std::size_t len = longest; len > 0; --len) {
      key.assign(prefix);
      key.append(text, pos, len);
      if (vocab_.count(key)) {
        best = len;
        break;
      }
    }
    if (best == 0) {
      best = std::min(text.size() - pos,
                      utf8_length(static_cast<unsigned char>(text[pos])));
    }
    std::string piece(prefix);
    piece.append(text, pos, best);
    pieces.push_back(std::move(piece));
    pos += best;
  }
  return pieces;
}

std::string GreedyTokenizer::detokenize(
    std::span<const std::string> pieces) const {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    std::string_view p = pieces[i];
    if (i > 0 && p.starts_with(kContinuation)) p.remove_prefix(kContinuation.size());
    out += p;
  }
  return out;
}

}  // namespace streampunct
