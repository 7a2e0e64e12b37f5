// core/src/data_pipeline.cc
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

#include "streampunct/data_pipeline.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <utility>

#include <nlohmann/json.hpp>

#include "streampunct/errors.h"

namespace streampunct {

using json = nlohmann::ordered_json;

namespace {

bool is_sentence_punct(char c) { return c == '.' || c == ',' || c == '?'; }

int punct_rank(char c) {
  switch (c) {
    case '?':
      return 3;
    case '.':
      return 2;
    case ',':
      return 1;
    default:
      return 0;
  }
}

char stronger(char a, char b) { return punct_rank(b) > punct_rank(a) ? b : a; }

bool is_ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

// Decodes one code point; returns its byte length, or 0 for a malformed
// sequence (the caller skips one byte).
std::size_t decode_utf8(std::string_view s, std::size_t i, char32_t& cp) {
  auto b = static_cast<unsigned char>(s[i]);
  std::size_t len;
  if (b < 0x80) {
    cp = b;
    return 1;
  } else if ((b >> 5) == 0x6) {
    cp = b & 0x1F;
    len = 2;
  } else if ((b >> 4) == 0xE) {
    cp = b & 0x0F;
    len = 3;
  } else if ((b >> 3) == 0x1E) {
    cp = b & 0x07;
    len = 4;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    auto c = static_cast<unsigned char>(s[i + k]);
    if ((c >> 6) != 0x2) return 0;
    cp = (cp << 6) | (c & 0x3F);
  }
  return len;
}

// Non-ASCII code points that are punctuation, symbols, spacing or controls
// rather than letters.
bool is_non_letter(char32_t cp) {
  return (cp >= 0x80 && cp <= 0xBF) || cp == 0xD7 || cp == 0xF7 ||
         (cp >= 0x2000 && cp <= 0x2BFF) || (cp >= 0x3000 && cp <= 0x303F) ||
         (cp >= 0xFE00 && cp <= 0xFE0F) || (cp >= 0xFF00 && cp <= 0xFF0F) ||
         (cp >= 0x1F000 && cp <= 0x1FAFF) || cp == 0xFEFF;
}

// Maps one code point to its cleaned ASCII spelling, or returns false if the
// original UTF-8 bytes should be kept.
bool fold_code_point(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    char c = static_cast<char>(cp);
    if (is_ascii_alnum(c) || c == '.' || c == ',' || c == '?' || c == '-' ||
        c == '\'') {
      out += c;
    } else if (c == '!') {
      out += '.';
    } else if (c == ';' || c == ':') {
      out += ',';
    } else {
      out += ' ';
    }
    return true;
  }
  // Full-width ASCII variants fold onto ASCII.
  if (cp >= 0xFF01 && cp <= 0xFF5E) {
    return fold_code_point(cp - 0xFF01 + 0x21, out);
  }
  switch (cp) {
    case 0x2018:  // left/right single quotation marks
    case 0x2019:
    case 0x02BC:
      out += '\'';
      return true;
    case 0x2010:  // hyphens and en dash
    case 0x2011:
    case 0x2013:
      out += '-';
      return true;
    case 0x2014:  // em dash reads as a pause
      out += " , ";
      return true;
    case 0x2026:  // ellipsis
      out += '.';
      return true;
    case 0xFF1F:
      out += '?';
      return true;
    default:
      break;
  }
  if (is_non_letter(cp)) {
    out += ' ';
    return true;
  }
  return false;
}

bool has_alnum(std::string_view token) {
  return std::any_of(token.begin(), token.end(), [](char c) {
    return is_ascii_alnum(c) || static_cast<unsigned char>(c) >= 0x80;
  });
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' ||
                            s[i] == '\r' || s[i] == '\f' || s[i] == '\v')) {
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && !(s[j] == ' ' || s[j] == '\t' || s[j] == '\n' ||
                             s[j] == '\r' || s[j] == '\f' || s[j] == '\v')) {
      ++j;
    }
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Splits a token into its body and the strongest trailing sentence mark
// ('\0' if none).
std::pair<std::string_view, char> split_trailing(std::string_view token) {
  char mark = '\0';
  while (!token.empty() && is_sentence_punct(token.back())) {
    mark = stronger(mark, token.back());
    token.remove_suffix(1);
  }
  return {token, mark};
}

std::size_t count_pieces(const TrainingRow& row,
                         const SubwordTokenizer& tokenizer, std::size_t limit,
                         std::size_t* fitting_words) {
  std::size_t total = 0;
  std::size_t fit = 0;
  for (const auto& w : row.words) {
    total += tokenizer.tokenize(w).size();
    if (total <= limit) ++fit;
  }
  if (fitting_words) *fitting_words = fit;
  return total;
}

}  // namespace

std::optional<std::string> clean_paragraph(std::string_view raw) {
  std::string mapped;
  mapped.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    char32_t cp = 0;
    std::size_t len = decode_utf8(raw, i, cp);
    if (len == 0) {
      mapped += ' ';
      ++i;
      continue;
    }
    if (!fold_code_point(cp, mapped)) mapped.append(raw, i, len);
    i += len;
  }

  std::vector<std::string> tokens;
  for (std::string_view tok : split_ws(mapped)) {
    while (!tok.empty() && is_sentence_punct(tok.front()) && has_alnum(tok)) {
      tok.remove_prefix(1);
    }
    auto [body, mark] = split_trailing(tok);
    if (!has_alnum(body)) {
      // Detached punctuation ("word , next") belongs to the previous word.
      if (mark != '\0' && !tokens.empty()) {
        std::string& prev = tokens.back();
        if (is_sentence_punct(prev.back())) {
          prev.back() = stronger(prev.back(), mark);
        } else {
          prev += mark;
        }
      }
      continue;
    }
    std::string t(body);
    if (mark != '\0') t += mark;
    tokens.push_back(std::move(t));
  }
  if (tokens.empty()) return std::nullopt;

  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

TrainingRow strip_and_tag(std::string_view paragraph) {
  TrainingRow row;
  for (std::string_view tok : split_ws(paragraph)) {
    auto [body, mark] = split_trailing(tok);
    PunctTag tag = tag_from_symbol(mark);
    if (body.empty()) {
      if (!row.tags.empty() && tag_index(tag) > tag_index(row.tags.back())) {
        row.tags.back() = tag;
      }
      continue;
    }
    std::string text(body);
    for (char& c : text) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    row.words.emplace_back(std::move(text));
    row.tags.push_back(tag);
  }
  if (row.words.empty()) {
    throw InvalidArgument("strip_and_tag: paragraph has no words");
  }
  return row;
}

std::optional<TrainingRow> trim_to_last_sentence(const TrainingRow& row) {
  std::size_t n = row.tags.size();
  while (n > 0 && !is_terminal(row.tags[n - 1])) --n;
  if (n == 0) return std::nullopt;
  if (n == row.tags.size()) return row;
  TrainingRow out;
  out.source_id = row.source_id;
  out.words.assign(row.words.begin(), row.words.begin() + static_cast<std::ptrdiff_t>(n));
  out.tags.assign(row.tags.begin(), row.tags.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

std::optional<TrainingRow> trim_row(const TrainingRow& row,
                                    const SubwordTokenizer& tokenizer,
                                    std::size_t max_tokens) {
  if (max_tokens < 1) throw InvalidArgument("trim_row: max_tokens must be >= 1");
  if (row.words.size() != row.tags.size()) {
    throw InvalidArgument("trim_row: words/tags length mismatch");
  }
  std::size_t fit = 0;
  if (count_pieces(row, tokenizer, max_tokens, &fit) <= max_tokens) return row;
  TrainingRow prefix;
  prefix.source_id = row.source_id;
  prefix.words.assign(row.words.begin(), row.words.begin() + static_cast<std::ptrdiff_t>(fit));
  prefix.tags.assign(row.tags.begin(), row.tags.begin() + static_cast<std::ptrdiff_t>(fit));
  return trim_to_last_sentence(prefix);
}

std::size_t validation_size(std::size_t n) {
  return std::min<std::size_t>(n / 10, 50000);
}

std::vector<bool> validation_mask(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> mask(n, false);
  const std::size_t v = validation_size(n);
  for (std::size_t k = 0; k < v; ++k) mask[order[k]] = true;
  return mask;
}

CorpusSplit split_corpus(std::vector<TrainingRow> rows, std::uint64_t seed) {
  auto mask = validation_mask(rows.size(), seed);
  CorpusSplit out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    (mask[i] ? out.validation : out.train).push_back(std::move(rows[i]));
  }
  return out;
}

std::string row_to_json(const TrainingRow& row) {
  json j;
  j["words"] = json::array();
  for (const auto& w : row.words) j["words"].push_back(w.text());
  j["tags"] = json::array();
  for (PunctTag t : row.tags) j["tags"].push_back(tag_name(t));
  j["source_id"] = row.source_id;
  return j.dump();
}

TrainingRow row_from_json(std::string_view line) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw FormatError("row is not a JSON object");
  }
  if (!j.contains("words") || !j["words"].is_array() || !j.contains("tags") ||
      !j["tags"].is_array()) {
    throw FormatError("row needs \"words\" and \"tags\" arrays");
  }
  TrainingRow row;
  for (const auto& w : j["words"]) {
    if (!w.is_string()) throw FormatError("row word is not a string");
    auto text = w.get<std::string>();
    auto why = Word::check(text);
    if (!why.empty()) throw FormatError(why);
    row.words.emplace_back(std::move(text));
  }
  for (const auto& t : j["tags"]) {
    if (!t.is_string()) throw FormatError("row tag is not a string");
    row.tags.push_back(parse_tag(t.get<std::string>()));
  }
  if (row.words.size() != row.tags.size()) {
    throw FormatError("row has " + std::to_string(row.words.size()) +
                      " words but " + std::to_string(row.tags.size()) + " tags");
  }
  if (j.contains("source_id")) {
    const auto& s = j["source_id"];
    row.source_id = s.is_string() ? s.get<std::string>() : s.dump();
  }
  return row;
}

std::vector<TrainingRow> read_rows(std::istream& in) {
  std::vector<TrainingRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      rows.push_back(row_from_json(line));
    } catch (const Error& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

std::vector<TrainingRow> read_rows_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return read_rows(in);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_rows(std::ostream& out, std::span<const TrainingRow> rows) {
  for (const auto& r : rows) out << row_to_json(r) << '\n';
}

PreparedCorpus prepare_corpus(std::istream& corpus,
                              const SubwordTokenizer& tokenizer,
                              const PrepareOptions& options) {
  PreparedCorpus result;
  PrepareStats& st = result.stats;
  std::vector<TrainingRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(corpus, line)) {
    ++line_no;
    ++st.paragraphs;
    auto cleaned = clean_paragraph(line);
    if (!cleaned) {
      ++st.dropped_by_cleaning;
      continue;
    }
    TrainingRow row = strip_and_tag(*cleaned);
    row.source_id = "p" + std::to_string(line_no);
    const std::size_t before = row.words.size();
    auto trimmed = trim_row(row, tokenizer, options.max_tokens);
    if (trimmed) trimmed = trim_to_last_sentence(*trimmed);
    if (!trimmed) {
      ++st.dropped_by_trimming;
      continue;
    }
    if (trimmed->words.size() != before) ++st.trimmed;
    st.words += trimmed->words.size();
    for (PunctTag t : trimmed->tags) ++st.tag_counts[tag_index(t)];
    rows.push_back(std::move(*trimmed));
  }
  st.rows = rows.size();
  result.split = split_corpus(std::move(rows), options.seed);
  st.train_rows = result.split.train.size();
  st.validation_rows = result.split.validation.size();
  return result;
}

std::string stats_to_json(const PrepareStats& st) {
  json j;
  j["paragraphs"] = st.paragraphs;
  j["dropped_by_cleaning"] = st.dropped_by_cleaning;
  j["dropped_by_trimming"] = st.dropped_by_trimming;
  j["trimmed"] = st.trimmed;
  j["rows"] = st.rows;
  j["train_rows"] = st.train_rows;
  j["validation_rows"] = st.validation_rows;
  j["words"] = st.words;
  json tags;
  for (PunctTag t : kAllTags) tags[std::string(tag_name(t))] = st.tag_counts[tag_index(t)];
  j["tag_counts"] = tags;
  return j.dump(2);
}

}  // namespace streampunct
