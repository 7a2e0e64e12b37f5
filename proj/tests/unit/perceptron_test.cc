// tests/unit/perceptron_test.cc
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

#include "streampunct/perceptron.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "streampunct/errors.h"
#include "test_support.h"

namespace streampunct {
namespace {

using P = PunctTag;
using testing::Rng;

bool has(const std::vector<std::string>& f, const std::string& s) {
  return std::find(f.begin(), f.end(), s) != f.end();
}

TEST(PerceptronFeatures, TemplateAroundLastWord) {
  auto f = perceptron_features(make_words({"it", "can", "happen"}), 2, 4, 4);
  EXPECT_TRUE(has(f, "w0=happen"));
  EXPECT_TRUE(has(f, "w-1=can"));
  EXPECT_TRUE(has(f, "w-2=it"));
  EXPECT_TRUE(has(f, "w-3=<pad>"));
  EXPECT_TRUE(has(f, "w+1=<pad>"));
  EXPECT_TRUE(has(f, "bias"));
  EXPECT_TRUE(has(f, "shape=w"));
}

TEST(PerceptronFeatures, SingleWordIsAllPadding) {
  auto f = perceptron_features(make_words({"x"}), 0, 4, 4);
  EXPECT_TRUE(has(f, "w0=x"));
  for (int k = 1; k <= 4; ++k) {
    EXPECT_TRUE(has(f, "w-" + std::to_string(k) + "=<pad>"));
    EXPECT_TRUE(has(f, "w+" + std::to_string(k) + "=<pad>"));
  }
}

TEST(PerceptronFeatures, BigramAndLowerCase) {
  auto f = perceptron_features(make_words({"A", "b"}), 0, 4, 4);
  EXPECT_TRUE(has(f, "bigram=a_b"));
  EXPECT_TRUE(has(f, "w0=a"));
}

TEST(PerceptronFeatures, NoLookAheadWindowDropsRightContext) {
  auto f = perceptron_features(make_words({"a", "b", "c"}), 0, 4, 0);
  for (const auto& s : f) {
    EXPECT_NE(s.rfind("w+", 0), 0u) << s;
    EXPECT_NE(s.rfind("bigram=", 0), 0u) << s;
  }
  EXPECT_TRUE(has(f, "w0=a"));
}

TEST(PerceptronFeatures, OutOfRangeThrows) {
  EXPECT_THROW(perceptron_features(make_words({"a"}), 1, 4, 4), InvalidArgument);
}

TEST(PerceptronFeatures, WordShape) {
  EXPECT_EQ(word_shape("happen"), "w");
  EXPECT_EQ(word_shape("42"), "d");
  EXPECT_EQ(word_shape("3.5"), "d.d");
  EXPECT_EQ(word_shape("well-known"), "w-w");
  EXPECT_EQ(word_shape("b2b"), "wdw");
}

std::vector<TrainingRow> stop_corpus(std::size_t n) {
  TrainingRow row;
  row.words = make_words({"a", "a", "stop"});
  row.tags = {P::kO, P::kO, P::kPeriod};
  return std::vector<TrainingRow>(n, row);
}

TEST(PerceptronTrain, ToyStopPattern) {
  auto model = perceptron_train(stop_corpus(20), {.epochs = 5, .seed = 0});
  EXPECT_TRUE(model.finalized());
  EXPECT_EQ(model.epochs_trained(), 5);
  EXPECT_EQ(model.tag(make_words({"a", "a", "stop"})), (std::vector<P>{P::kO, P::kO, P::kPeriod}));
  EXPECT_DOUBLE_EQ(token_accuracy(model, stop_corpus(5)), 1.0);
}

// "stop" moved to the front: the answer depends on whether the word feature
// outweighs the positional and padding evidence learned from the pattern.
// Computed by summing the learned weights directly.
TEST(PerceptronTrain, StopFirstFollowsSummedWeights) {
  auto model = perceptron_train(stop_corpus(20), {.epochs = 5, .seed = 0});
  auto words = make_words({"stop", "a"});
  auto feats = model.features(words, 0);
  std::array<double, kNumTags> sum{};
  for (const auto& f : feats) {
    auto it = model.weights().find(f);
    if (it == model.weights().end()) continue;
    for (std::size_t k = 0; k < kNumTags; ++k) sum[k] += it->second[k];
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < kNumTags; ++k) {
    if (sum[k] > sum[best]) best = k;
  }
  EXPECT_EQ(model.tag(words)[0], kAllTags[best]);
}

TEST(PerceptronTrain, SingleExample) {
  TrainingRow row{make_words({"x"}), {P::kO}, "x"};
  auto model = perceptron_train(std::vector<TrainingRow>{row}, {.epochs = 1});
  EXPECT_EQ(model.tag(make_words({"x"})), std::vector<P>{P::kO});
}

TEST(PerceptronTrain, RejectsBadInput) {
  EXPECT_THROW(perceptron_train({}, {}), InvalidArgument);
  EXPECT_THROW(perceptron_train(stop_corpus(1), {.epochs = 0}), InvalidArgument);
  TrainingRow bad{make_words({"a", "b"}), {P::kO}, "bad"};
  EXPECT_THROW(perceptron_train(std::vector<TrainingRow>{bad}, {}), InvalidArgument);
  TrainingRow empty{{}, {}, "empty"};
  EXPECT_THROW(perceptron_train(std::vector<TrainingRow>{empty}, {}), InvalidArgument);
}

TEST(PerceptronTrain, VocabTruncationCapsFeatures) {
  Rng rng(3);
  std::vector<TrainingRow> corpus;
  for (int i = 0; i < 30; ++i) corpus.push_back(testing::random_punctuated_row(rng, 3, 7));
  auto full = perceptron_train(corpus, {.epochs = 2});
  auto small = perceptron_train(corpus, {.epochs = 2, .vocab_truncation = 10});
  EXPECT_GT(full.weights().size(), 10u);
  EXPECT_LE(small.weights().size(), 10u);
  EXPECT_EQ(small.vocab_truncation(), std::optional<std::size_t>(10));
}

TEST(PerceptronModel, ZeroWeightsTagAllO) {
  PerceptronModel m;
  m.finalize();
  EXPECT_EQ(m.tag(make_words({"a", "b", "c"})), (std::vector<P>{P::kO, P::kO, P::kO}));
}

TEST(PerceptronModel, TieBreaksTowardLowerClass) {
  PerceptronModel m;
  m.set_weight("bias", P::kPeriod, 1.0);
  m.set_weight("bias", P::kQMark, 1.0);
  m.set_weight("bias", P::kComma, 1.0);
  m.finalize();
  EXPECT_EQ(m.tag(make_words({"a"})), std::vector<P>{P::kComma});
}

TEST(PerceptronModel, FinalizedIsReadOnly) {
  PerceptronModel m;
  EXPECT_THROW(m.tag(make_words({"a"})), InvalidArgument);
  m.finalize();
  EXPECT_THROW(m.set_weight("bias", P::kO, 1.0), InvalidArgument);
  EXPECT_THROW(m.set_epochs_trained(3), InvalidArgument);
}

PerceptronModel reload(const PerceptronModel& m) {
  std::stringstream ss;
  m.save(ss);
  return PerceptronModel::load(ss);
}

TEST(PerceptronModel, SaveLoadRoundTrip) {
  auto model = perceptron_train(stop_corpus(10), {.epochs = 3, .window_after = 2});
  auto back = reload(model);
  EXPECT_EQ(back.weights(), model.weights());
  EXPECT_EQ(back.window_before(), 4u);
  EXPECT_EQ(back.window_after(), 2u);
  EXPECT_EQ(back.epochs_trained(), 3);
  auto w = make_words({"a", "a", "stop"});
  EXPECT_EQ(back.tag(w), model.tag(w));
}

TEST(PerceptronModel, HeaderLayout) {
  auto model = perceptron_train(stop_corpus(3), {.epochs = 1});
  std::stringstream ss;
  model.save(ss);
  std::string l1, l2, l3;
  std::getline(ss, l1);
  std::getline(ss, l2);
  std::getline(ss, l3);
  EXPECT_EQ(l1, "STREAMPUNCT-PERCEPTRON v1");
  EXPECT_EQ(l2.rfind("window_before=4 window_after=4", 0), 0u);
  EXPECT_EQ(std::count(l3.begin(), l3.end(), '\t'), 2);
}

PerceptronModel load_text(const std::string& text) {
  std::istringstream in(text);
  return PerceptronModel::load(in);
}

TEST(PerceptronModel, LoadErrors) {
  try {
    load_text("");
    FAIL() << "empty file loaded";
  } catch (const VersionError&) {
    FAIL() << "empty file reported as version error";
  } catch (const FormatError&) {
  }
  EXPECT_THROW(load_text("STREAMPUNCT-PERCEPTRON v2\nwindow_before=4 window_after=4\n"),
               VersionError);
  try {
    load_text("NOT-A-MODEL v1\n");
    FAIL();
  } catch (const VersionError&) {
    FAIL() << "bad magic reported as version error";
  } catch (const FormatError&) {
  }
  EXPECT_THROW(load_text("STREAMPUNCT-PERCEPTRON v1\n"), FormatError);
  EXPECT_THROW(load_text("STREAMPUNCT-PERCEPTRON v1\nwindow_before=4 window_after=4\nbias\tO\n"),
               FormatError);
  EXPECT_THROW(load_text("STREAMPUNCT-PERCEPTRON v1\nwindow_before=4 window_after=4\n"
                         "bias\tO\t1\nbias\tO\t2\n"),
               FormatError);
  EXPECT_THROW(load_text("STREAMPUNCT-PERCEPTRON v1\nwindow_before=4 window_after=4\n"
                         "bias\tBANG\t1\n"),
               FormatError);
  EXPECT_THROW(load_text("STREAMPUNCT-PERCEPTRON v1\nwindow_before=4 window_after=4\n"
                         "bias\tO\tabc\n"),
               FormatError);
  EXPECT_NO_THROW(load_text("STREAMPUNCT-PERCEPTRON v1\nwindow_before=4 window_after=4\n"));
}

// Training is a pure function of (corpus, options); the file round trip is
// lossless.
TEST(PerceptronProperty, DeterministicTrainingAndLosslessFiles) {
  for (int c = 0; c < 200; ++c) {
    Rng rng(testing::case_seed(41, c));
    SCOPED_TRACE("case " + std::to_string(c));
    std::vector<TrainingRow> corpus;
    const std::size_t rows = rng.uniform(1, 6);
    for (std::size_t i = 0; i < rows; ++i) corpus.push_back(testing::random_row(rng, 1, 12));
    PerceptronTrainOptions opts;
    opts.epochs = static_cast<int>(rng.uniform(1, 3));
    opts.seed = rng.uniform(0, 1000);
    opts.window_before = rng.uniform(0, 4);
    opts.window_after = rng.uniform(0, 4);
    auto a = perceptron_train(corpus, opts);
    auto b = perceptron_train(corpus, opts);
    ASSERT_EQ(a.weights(), b.weights());
    auto back = reload(a);
    ASSERT_EQ(back.weights(), a.weights());
    auto probe = testing::random_words(rng, rng.uniform(1, 15));
    EXPECT_EQ(back.tag(probe), a.tag(probe));
  }
}

}  // namespace
}  // namespace streampunct
