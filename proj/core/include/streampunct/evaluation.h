// streampunct/evaluation.h
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

#ifndef STREAMPUNCT_EVALUATION_H_
#define STREAMPUNCT_EVALUATION_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "streampunct/types.h"

namespace streampunct {

struct MetricConfig {
  // Weight of recall relative to precision in the segmentation F-score.
  double beta = 0.5;

  void validate() const;
};

// The scored punctuation classes; O is never scored.
inline constexpr std::array<PunctTag, 3> kScoredTags = {
    PunctTag::kComma, PunctTag::kPeriod, PunctTag::kQMark};

struct Counts {
  std::size_t tp = 0;
  std::size_t hyp = 0;
  std::size_t ref = 0;

  Counts& operator+=(const Counts& o) {
    tp += o.tp;
    hyp += o.hyp;
    ref += o.ref;
    return *this;
  }
  friend bool operator==(const Counts&, const Counts&) = default;
};

// Counts for one or more sessions; summing before computing ratios gives
// micro-averaged scores.
struct EvalCounts {
  std::array<Counts, 3> per_class{};  // indexed like kScoredTags
  Counts segmentation;

  Counts overall() const;
  EvalCounts& operator+=(const EvalCounts& o);
  friend bool operator==(const EvalCounts&, const EvalCounts&) = default;
};

struct Scores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  Counts counts;
};

struct SegmentationScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double f05 = 0.0;  // F-score at MetricConfig::beta (0.5 by default)
  Counts counts;
};

struct EvalReport {
  std::array<Scores, 3> per_class{};  // indexed like kScoredTags
  Scores overall;
  SegmentationScores segmentation;

  const Scores& for_tag(PunctTag tag) const;
};

// (1 + b^2) p r / (b^2 p + r); 0 when p = r = 0. Throws InvalidArgument if p
// or r lie outside [0, 1] or beta <= 0.
double f_beta(double p, double r, double beta);

// tp / denominator with 0/0 = 0.
double safe_ratio(std::size_t num, std::size_t den);

// Positional tag comparison. Throws InvalidArgument on a length mismatch.
EvalCounts count_tags(std::span<const PunctTag> ref,
                      std::span<const PunctTag> hyp);

Scores score_counts(const Counts& counts);
EvalReport make_report(const EvalCounts& counts, const MetricConfig& config);

// Per-class and micro-averaged overall P/R/F1 (segmentation left zero).
EvalReport punctuation_scores(std::span<const PunctTag> ref,
                              std::span<const PunctTag> hyp,
                              const MetricConfig& config = {});

// Boundary quality only: COMMA is ignored and PERIOD/QMARK are
// interchangeable.
SegmentationScores segmentation_scores(std::span<const PunctTag> ref,
                                       std::span<const PunctTag> hyp,
                                       const MetricConfig& config = {});

// 100 * (new - old) / old. Throws InvalidArgument when old == 0.
double relative_gain(double new_score, double old_score);

double mean(std::span<const double> values);

// Round half away from zero at `decimals` places, tolerant of binary
// representation error (13.85 -> 13.9 even though 13.85 is stored as
// 13.8499...).
double round_half_up(double value, int decimals);

// Score in [0, 1] to an integer percent, half-up.
int round_percent(double score);

// Flattens one session's references and hypothesis sentences into aligned
// tag sequences and counts them. Words are compared case-insensitively;
// throws AlignmentError at the first differing position.
EvalCounts count_session(std::span<const TrainingRow> reference,
                         std::span<const TaggedSentence> hypothesis);

EvalReport evaluate_session(std::span<const TrainingRow> reference,
                            std::span<const TaggedSentence> hypothesis,
                            const MetricConfig& config = {});

// Aligned text table (scores as percents; integers when `round`).
std::string report_to_table(const EvalReport& report, bool round);
// JSON with full-precision fractions, or integer percents when `round`.
std::string report_to_json(const EvalReport& report, bool round);

}  // namespace streampunct

#endif  // STREAMPUNCT_EVALUATION_H_
