// core/src/evaluation.cc
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

#include "streampunct/evaluation.h"

#include <cmath>
#include <cstdio>
#include <numeric>

#include <nlohmann/json.hpp>

#include "streampunct/errors.h"

namespace streampunct {

using json = nlohmann::ordered_json;

namespace {

std::size_t scored_index(PunctTag t) {
  for (std::size_t k = 0; k < kScoredTags.size(); ++k) {
    if (kScoredTags[k] == t) return k;
  }
  return kScoredTags.size();
}

char lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool same_word(const Word& a, const Word& b) {
  const auto& x = a.text();
  const auto& y = b.text();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (lower(x[i]) != lower(y[i])) return false;
  }
  return true;
}

// Display order used by the tables: PERIOD, QMARK, COMMA.
constexpr std::array<PunctTag, 3> kTableOrder = {
    PunctTag::kPeriod, PunctTag::kQMark, PunctTag::kComma};

std::string cell(double score, bool round) {
  char buf[32];
  if (round) {
    std::snprintf(buf, sizeof(buf), "%6d", round_percent(score));
  } else {
    std::snprintf(buf, sizeof(buf), "%8.2f", 100.0 * score);
  }
  return buf;
}

json score_value(double score, bool round) {
  if (round) return round_percent(score);
  return score;
}

}  // namespace

void MetricConfig::validate() const {
  if (!(beta > 0.0)) throw InvalidArgument("beta must be positive");
}

Counts EvalCounts::overall() const {
  Counts c;
  for (const auto& pc : per_class) c += pc;
  return c;
}

EvalCounts& EvalCounts::operator+=(const EvalCounts& o) {
  for (std::size_t k = 0; k < per_class.size(); ++k) per_class[k] += o.per_class[k];
  segmentation += o.segmentation;
  return *this;
}

const Scores& EvalReport::for_tag(PunctTag tag) const {
  std::size_t k = scored_index(tag);
  if (k == kScoredTags.size()) throw InvalidArgument("O is not a scored class");
  return per_class[k];
}

double f_beta(double p, double r, double beta) {
  if (!(p >= 0.0 && p <= 1.0) || !(r >= 0.0 && r <= 1.0)) {
    throw InvalidArgument("f_beta: precision and recall must lie in [0, 1]");
  }
  if (!(beta > 0.0)) throw InvalidArgument("f_beta: beta must be positive");
  if (p == 0.0 && r == 0.0) return 0.0;
  const double b2 = beta * beta;
  return (1.0 + b2) * p * r / (b2 * p + r);
}

double safe_ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

EvalCounts count_tags(std::span<const PunctTag> ref,
                      std::span<const PunctTag> hyp) {
  if (ref.size() != hyp.size()) {
    throw InvalidArgument("reference has " + std::to_string(ref.size()) +
                          " tags but hypothesis has " +
                          std::to_string(hyp.size()));
  }
  EvalCounts c;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    std::size_t r = scored_index(ref[i]);
    std::size_t h = scored_index(hyp[i]);
    if (r < 3) ++c.per_class[r].ref;
    if (h < 3) ++c.per_class[h].hyp;
    if (r < 3 && r == h) ++c.per_class[r].tp;

    bool rb = is_terminal(ref[i]);
    bool hb = is_terminal(hyp[i]);
    c.segmentation.ref += rb;
    c.segmentation.hyp += hb;
    c.segmentation.tp += rb && hb;
  }
  return c;
}

Scores score_counts(const Counts& counts) {
  Scores s;
  s.counts = counts;
  s.precision = safe_ratio(counts.tp, counts.hyp);
  s.recall = safe_ratio(counts.tp, counts.ref);
  s.f1 = f_beta(s.precision, s.recall, 1.0);
  return s;
}

EvalReport make_report(const EvalCounts& counts, const MetricConfig& config) {
  config.validate();
  EvalReport r;
  for (std::size_t k = 0; k < kScoredTags.size(); ++k) {
    r.per_class[k] = score_counts(counts.per_class[k]);
  }
  r.overall = score_counts(counts.overall());
  Scores seg = score_counts(counts.segmentation);
  r.segmentation.counts = counts.segmentation;
  r.segmentation.precision = seg.precision;
  r.segmentation.recall = seg.recall;
  r.segmentation.f1 = seg.f1;
  r.segmentation.f05 = f_beta(seg.precision, seg.recall, config.beta);
  return r;
}

EvalReport punctuation_scores(std::span<const PunctTag> ref,
                              std::span<const PunctTag> hyp,
                              const MetricConfig& config) {
  EvalCounts c = count_tags(ref, hyp);
  c.segmentation = {};
  return make_report(c, config);
}

SegmentationScores segmentation_scores(std::span<const PunctTag> ref,
                                       std::span<const PunctTag> hyp,
                                       const MetricConfig& config) {
  return make_report(count_tags(ref, hyp), config).segmentation;
}

double relative_gain(double new_score, double old_score) {
  if (old_score == 0.0) {
    throw InvalidArgument("relative_gain: old score must be non-zero");
  }
  return 100.0 * (new_score - old_score) / old_score;
}

double mean(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("mean of an empty set");
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double round_half_up(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double scaled = value * scale;
  // Nudge by a few ulps so representation error cannot flip a half.
  const double nudge = std::abs(scaled) * 1e-12 + 1e-12;
  const double r = scaled >= 0 ? std::floor(scaled + 0.5 + nudge)
                               : -std::floor(-scaled + 0.5 + nudge);
  return r / scale;
}

int round_percent(double score) {
  return static_cast<int>(round_half_up(100.0 * score, 0));
}

EvalCounts count_session(std::span<const TrainingRow> reference,
                         std::span<const TaggedSentence> hypothesis) {
  std::vector<const Word*> ref_words;
  std::vector<PunctTag> ref_tags;
  for (const auto& row : reference) {
    if (row.words.size() != row.tags.size()) {
      throw InvalidArgument("reference row '" + row.source_id +
                            "' words/tags length mismatch");
    }
    for (std::size_t i = 0; i < row.words.size(); ++i) {
      ref_words.push_back(&row.words[i]);
      ref_tags.push_back(row.tags[i]);
    }
  }
  std::vector<PunctTag> hyp_tags;
  hyp_tags.reserve(ref_tags.size());
  std::size_t pos = 0;
  for (const auto& s : hypothesis) {
    for (const auto& item : s.items) {
      if (pos >= ref_words.size()) {
        throw AlignmentError("hypothesis has extra word '" + item.word.text() +
                                 "' at position " + std::to_string(pos),
                             pos);
      }
      if (!same_word(*ref_words[pos], item.word)) {
        throw AlignmentError("word mismatch at position " + std::to_string(pos) +
                                 ": reference '" + ref_words[pos]->text() +
                                 "', hypothesis '" + item.word.text() + "'",
                             pos);
      }
      hyp_tags.push_back(item.tag);
      ++pos;
    }
  }
  if (pos != ref_words.size()) {
    throw AlignmentError("hypothesis ends at position " + std::to_string(pos) +
                             " but reference has " +
                             std::to_string(ref_words.size()) + " words",
                         pos);
  }
  return count_tags(ref_tags, hyp_tags);
}

EvalReport evaluate_session(std::span<const TrainingRow> reference,
                            std::span<const TaggedSentence> hypothesis,
                            const MetricConfig& config) {
  return make_report(count_session(reference, hypothesis), config);
}

std::string report_to_table(const EvalReport& report, bool round) {
  const char* head = round ? "%-14s%6s%6s%6s%8s%8s%8s\n" : "%-14s%8s%8s%8s%8s%8s%8s\n";
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), head, "class", "P", "R", "F1", "ref", "hyp",
                "tp");
  out += line;
  auto row = [&](const char* name, const Scores& s) {
    std::snprintf(line, sizeof(line), "%-14s%s%s%s%8zu%8zu%8zu\n", name,
                  cell(s.precision, round).c_str(), cell(s.recall, round).c_str(),
                  cell(s.f1, round).c_str(), s.counts.ref, s.counts.hyp,
                  s.counts.tp);
    out += line;
  };
  for (PunctTag t : kTableOrder) row(std::string(tag_name(t)).c_str(), report.for_tag(t));
  row("OVERALL", report.overall);
  out += '\n';
  const auto& seg = report.segmentation;
  std::snprintf(line, sizeof(line), head, "segmentation", "P", "R", "F1", "F0.5",
                "ref", "hyp");
  out += line;
  std::snprintf(line, sizeof(line), "%-14s%s%s%s%s%8zu%8zu\n", "", cell(seg.precision, round).c_str(),
                cell(seg.recall, round).c_str(), cell(seg.f1, round).c_str(),
                cell(seg.f05, round).c_str(), seg.counts.ref, seg.counts.hyp);
  out += line;
  return out;
}

std::string report_to_json(const EvalReport& report, bool round) {
  auto scores = [&](const Scores& s) {
    json j;
    j["precision"] = score_value(s.precision, round);
    j["recall"] = score_value(s.recall, round);
    j["f1"] = score_value(s.f1, round);
    j["ref_count"] = s.counts.ref;
    j["hyp_count"] = s.counts.hyp;
    j["tp_count"] = s.counts.tp;
    return j;
  };
  json j;
  json per_class;
  for (PunctTag t : kTableOrder) per_class[std::string(tag_name(t))] = scores(report.for_tag(t));
  j["per_class"] = per_class;
  j["overall"] = scores(report.overall);
  const auto& seg = report.segmentation;
  json s;
  s["precision"] = score_value(seg.precision, round);
  s["recall"] = score_value(seg.recall, round);
  s["f1"] = score_value(seg.f1, round);
  s["f05"] = score_value(seg.f05, round);
  s["ref_count"] = seg.counts.ref;
  s["hyp_count"] = seg.counts.hyp;
  s["tp_count"] = seg.counts.tp;
  j["segmentation"] = s;
  return j.dump(2);
}

}  // namespace streampunct
