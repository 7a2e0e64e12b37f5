// tests/unit/evaluation_test.cc
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

#include <gtest/gtest.h>

#include <map>

#include "streampunct/errors.h"
#include "test_support.h"

namespace streampunct {
namespace {

using P = PunctTag;
using testing::Rng;

// Weighted harmonic mean form, kept separate from the library's formula.
double f_oracle(double p, double r, double beta) {
  if (p == 0.0 || r == 0.0) return 0.0;
  const double b2 = beta * beta;
  return 1.0 / ((1.0 / (1.0 + b2)) / p + (b2 / (1.0 + b2)) / r);
}

TEST(FBeta, MatchesHandValues) {
  EXPECT_NEAR(f_beta(0.66, 0.74, 0.5), 0.674586, 1e-6);
  EXPECT_NEAR(f_beta(0.67, 0.68, 1.0), 0.674963, 1e-6);
  EXPECT_DOUBLE_EQ(f_beta(0.0, 0.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(f_beta(1.0, 1.0, 0.5), 1.0);
  EXPECT_THROW(f_beta(1.2, 0.5, 1.0), InvalidArgument);
  EXPECT_THROW(f_beta(0.5, 0.5, 0.0), InvalidArgument);
}

TEST(RoundHalfUp, Examples) {
  EXPECT_DOUBLE_EQ(round_half_up(13.85, 1), 13.9);
  EXPECT_DOUBLE_EQ(round_half_up(4.275, 1), 4.3);
  EXPECT_DOUBLE_EQ(round_half_up(0.6571428, 2), 0.66);
  EXPECT_EQ(round_percent(0.675), 68);
  EXPECT_EQ(round_percent(0.6746), 67);
  EXPECT_EQ(round_percent(1.0), 100);
}

TEST(RelativeGain, Basics) {
  EXPECT_DOUBLE_EQ(relative_gain(110.0, 100.0), 10.0);
  EXPECT_THROW(relative_gain(1.0, 0.0), InvalidArgument);
  EXPECT_THROW(mean(std::vector<double>{}), InvalidArgument);
}

TEST(Scores, IdenticalIsPerfect) {
  std::vector<P> ref = {P::kO, P::kComma, P::kPeriod, P::kO, P::kQMark};
  auto report = punctuation_scores(ref, ref);
  for (const auto& s : report.per_class) EXPECT_DOUBLE_EQ(s.f1, 1.0);
  EXPECT_DOUBLE_EQ(report.overall.f1, 1.0);
  auto seg = segmentation_scores(ref, ref);
  EXPECT_DOUBLE_EQ(seg.precision, 1.0);
  EXPECT_DOUBLE_EQ(seg.f05, 1.0);
}

TEST(Scores, SegmentationMergesTerminalsIgnoresCommas) {
  std::vector<P> ref = {P::kO, P::kComma, P::kPeriod, P::kO, P::kQMark};
  std::vector<P> hyp = {P::kComma, P::kO, P::kQMark, P::kO, P::kPeriod};
  auto seg = segmentation_scores(ref, hyp);
  EXPECT_DOUBLE_EQ(seg.precision, 1.0);
  EXPECT_DOUBLE_EQ(seg.recall, 1.0);
  auto punct = punctuation_scores(ref, hyp);
  EXPECT_DOUBLE_EQ(punct.overall.precision, 0.0);
}

TEST(Scores, LengthMismatchThrows) {
  std::vector<P> a = {P::kO};
  std::vector<P> b;
  EXPECT_THROW(count_tags(a, b), InvalidArgument);
}

TEST(EvaluateSession, AlignmentErrors) {
  TrainingRow ref{make_words({"a", "b"}), {P::kO, P::kPeriod}, "s"};
  auto good = make_sentence(make_words({"A", "b"}), std::vector<P>{P::kO, P::kPeriod}, false);
  std::vector<TrainingRow> refs{ref};
  EXPECT_DOUBLE_EQ(evaluate_session(refs, std::vector<TaggedSentence>{good}).overall.f1, 1.0);

  auto wrong = make_sentence(make_words({"a", "c"}), std::vector<P>{P::kO, P::kPeriod}, false);
  try {
    count_session(refs, std::vector<TaggedSentence>{wrong});
    FAIL();
  } catch (const AlignmentError& e) {
    EXPECT_EQ(e.position(), 1u);
  }
  auto shorter = make_sentence(make_words({"a"}), std::vector<P>{P::kPeriod}, false);
  EXPECT_THROW(count_session(refs, std::vector<TaggedSentence>{shorter}), AlignmentError);
  EXPECT_THROW(count_session(refs, std::vector<TaggedSentence>{good, shorter}), AlignmentError);
}

TEST(Report, TableAndJsonShapes) {
  std::vector<P> ref = {P::kO, P::kComma, P::kPeriod};
  std::vector<P> hyp = {P::kComma, P::kComma, P::kPeriod};
  auto report = make_report(count_tags(ref, hyp), {});
  auto table = report_to_table(report, true);
  EXPECT_NE(table.find("PERIOD"), std::string::npos);
  EXPECT_NE(table.find("OVERALL"), std::string::npos);
  EXPECT_NE(table.find("F0.5"), std::string::npos);
  EXPECT_LT(table.find("PERIOD"), table.find("QMARK"));
  EXPECT_LT(table.find("QMARK"), table.find("COMMA"));
  EXPECT_NE(table.find("    50"), std::string::npos);  // COMMA precision 1/2
  auto json = report_to_json(report, false);
  EXPECT_NE(json.find("\"f05\""), std::string::npos);
  EXPECT_NE(json.find("0.5"), std::string::npos);
}

// Counting by brute force over (ref, hyp) pairs.
EvalCounts oracle_counts(const std::vector<P>& ref, const std::vector<P>& hyp) {
  EvalCounts c;
  std::map<P, std::size_t> slot = {{P::kComma, 0}, {P::kPeriod, 1}, {P::kQMark, 2}};
  for (std::size_t i = 0; i < ref.size(); ++i) {
    if (slot.count(ref[i])) c.per_class[slot[ref[i]]].ref++;
    if (slot.count(hyp[i])) c.per_class[slot[hyp[i]]].hyp++;
    if (ref[i] == hyp[i] && slot.count(ref[i])) c.per_class[slot[ref[i]]].tp++;
    const bool rb = ref[i] == P::kPeriod || ref[i] == P::kQMark;
    const bool hb = hyp[i] == P::kPeriod || hyp[i] == P::kQMark;
    c.segmentation.ref += rb;
    c.segmentation.hyp += hb;
    c.segmentation.tp += rb && hb;
  }
  return c;
}

TEST(EvaluationProperty, CountsMatchBruteForceAndMicroSums) {
  for (int c = 0; c < 300; ++c) {
    Rng rng(testing::case_seed(81, c));
    const std::size_t n = rng.uniform(0, 80);
    std::vector<P> ref, hyp;
    for (std::size_t i = 0; i < n; ++i) {
      ref.push_back(testing::random_tag(rng, 0.4));
      hyp.push_back(testing::random_tag(rng, 0.4));
    }
    auto counts = count_tags(ref, hyp);
    EXPECT_EQ(counts, oracle_counts(ref, hyp));
    Counts sum;
    for (const auto& pc : counts.per_class) sum += pc;
    EXPECT_EQ(counts.overall(), sum);
    auto report = make_report(counts, {});
    if (sum.hyp > 0 && sum.ref > 0) {
      const double p = double(sum.tp) / double(sum.hyp);
      const double r = double(sum.tp) / double(sum.ref);
      EXPECT_NEAR(report.overall.f1, f_oracle(p, r, 1.0), 1e-12);
    }
  }
}

TEST(EvaluationProperty, PermutationCovariant) {
  for (int c = 0; c < 200; ++c) {
    Rng rng(testing::case_seed(82, c));
    const std::size_t n = rng.uniform(1, 60);
    std::vector<P> ref, hyp;
    for (std::size_t i = 0; i < n; ++i) {
      ref.push_back(testing::random_tag(rng, 0.5));
      hyp.push_back(testing::random_tag(rng, 0.5));
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    std::vector<P> pr(n), ph(n);
    for (std::size_t i = 0; i < n; ++i) {
      pr[i] = ref[perm[i]];
      ph[i] = hyp[perm[i]];
    }
    EXPECT_EQ(count_tags(ref, hyp), count_tags(pr, ph));
  }
}

TEST(EvaluationProperty, SegmentationIgnoresEquivalentSwaps) {
  for (int c = 0; c < 200; ++c) {
    Rng rng(testing::case_seed(83, c));
    const std::size_t n = rng.uniform(1, 60);
    std::vector<P> ref, alt;
    for (std::size_t i = 0; i < n; ++i) {
      P t = testing::random_tag(rng, 0.5);
      ref.push_back(t);
      if (!rng.chance(0.5)) {
        alt.push_back(t);
      } else if (t == P::kO || t == P::kComma) {
        alt.push_back(t == P::kO ? P::kComma : P::kO);
      } else {
        alt.push_back(t == P::kPeriod ? P::kQMark : P::kPeriod);
      }
    }
    auto seg = segmentation_scores(ref, alt);
    const bool any = std::any_of(ref.begin(), ref.end(), [](P t) { return is_terminal(t); });
    EXPECT_DOUBLE_EQ(seg.precision, any ? 1.0 : 0.0);
    EXPECT_DOUBLE_EQ(seg.recall, any ? 1.0 : 0.0);
  }
}

TEST(EvaluationProperty, FBetaOrderingAndMonotonicity) {
  Rng rng(84);
  for (int c = 0; c < 1000; ++c) {
    const double p = 0.01 + 0.99 * rng.unit();
    const double r = 0.01 + 0.99 * rng.unit();
    const double f1 = f_beta(p, r, 1.0);
    const double f05 = f_beta(p, r, 0.5);
    EXPECT_NEAR(f1, f_oracle(p, r, 1.0), 1e-12);
    EXPECT_NEAR(f05, f_oracle(p, r, 0.5), 1e-12);
    if (p > r + 1e-9) EXPECT_GT(f05, f1);
    if (p < r - 1e-9) EXPECT_LT(f05, f1);
    const double dp = std::min(1.0, p + 0.01);
    const double dr = std::min(1.0, r + 0.01);
    EXPECT_GE(f_beta(dp, r, 0.5), f05);
    EXPECT_GE(f_beta(p, dr, 0.5), f05);
  }
}

}  // namespace
}  // namespace streampunct
