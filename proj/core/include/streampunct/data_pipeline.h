// streampunct/data_pipeline.h
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

#ifndef STREAMPUNCT_DATA_PIPELINE_H_
#define STREAMPUNCT_DATA_PIPELINE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "streampunct/tokenizer.h"
#include "streampunct/types.h"

namespace streampunct {

// Written-form cleanup. Keeps letters, digits, whitespace and . , ? ! ; : - '
// after folding '!' to '.' and ';' / ':' to ','. Quotes, brackets and other
// symbols become spaces. Curly apostrophes, dashes, ellipses and full-width
// ASCII forms are normalized first. Runs of sentence punctuation collapse to
// the strongest member (? over . over ,), punctuation detached from its word
// is re-attached to the previous word, and whitespace is collapsed.
// Returns nullopt when no letter or digit survives.
std::optional<std::string> clean_paragraph(std::string_view raw);

// Cleaned written form to spoken-form words and tags. Words are ASCII
// lower-cased; a trailing '.', ',' or '?' becomes the word's tag. Alignment
// is positional. Throws InvalidArgument if no word remains.
TrainingRow strip_and_tag(std::string_view paragraph);

// Cuts the row back to its last terminal tag; nullopt if it has none.
std::optional<TrainingRow> trim_to_last_sentence(const TrainingRow& row);

// Leaves rows within `max_tokens` subword pieces alone. Longer rows are cut to
// the longest fitting word prefix and then back to the last sentence end;
// nullopt if no sentence end survives.
std::optional<TrainingRow> trim_row(const TrainingRow& row,
                                    const SubwordTokenizer& tokenizer,
                                    std::size_t max_tokens = 250);

// min(floor(n / 10), 50000).
std::size_t validation_size(std::size_t n);

// Marks which of n rows go to validation (seeded shuffle, first
// validation_size(n) picks).
std::vector<bool> validation_mask(std::size_t n, std::uint64_t seed);

struct CorpusSplit {
  std::vector<TrainingRow> train;
  std::vector<TrainingRow> validation;
};

// Both halves keep the input's relative order.
CorpusSplit split_corpus(std::vector<TrainingRow> rows, std::uint64_t seed);

// TrainingRow as one JSON object: {"words": [...], "tags": [...],
// "source_id": "..."}.
std::string row_to_json(const TrainingRow& row);
// Throws FormatError on malformed records or invalid words.
TrainingRow row_from_json(std::string_view line);
// Blank lines are skipped; errors name the 1-based line.
std::vector<TrainingRow> read_rows(std::istream& in);
std::vector<TrainingRow> read_rows_file(const std::string& path);
void write_rows(std::ostream& out, std::span<const TrainingRow> rows);

struct PrepareOptions {
  std::size_t max_tokens = 250;
  std::uint64_t seed = 0;
};

struct PrepareStats {
  std::size_t paragraphs = 0;
  std::size_t dropped_by_cleaning = 0;
  std::size_t dropped_by_trimming = 0;
  std::size_t trimmed = 0;
  std::size_t rows = 0;
  std::size_t train_rows = 0;
  std::size_t validation_rows = 0;
  std::size_t words = 0;
  std::array<std::size_t, kNumTags> tag_counts{};
};

struct PreparedCorpus {
  CorpusSplit split;
  PrepareStats stats;
};

// One paragraph per input line. Rows get source_id "p<line>" (1-based) and
// always end at a sentence boundary.
PreparedCorpus prepare_corpus(std::istream& corpus,
                              const SubwordTokenizer& tokenizer,
                              const PrepareOptions& options);

std::string stats_to_json(const PrepareStats& stats);

}  // namespace streampunct

#endif  // STREAMPUNCT_DATA_PIPELINE_H_
