// tests/unit/tagger_test.cc
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

#include "streampunct/tagger.h"

#include <gtest/gtest.h>

#include "streampunct/errors.h"
#include "streampunct/oracle_tagger.h"
#include "streampunct/perceptron.h"
#include "test_support.h"

namespace streampunct {
namespace {

using P = PunctTag;
using testing::Rng;

class WrongLengthTagger final : public Tagger {
 protected:
  std::vector<PunctTag> do_tag(std::span<const Word> words,
                               const TagContext&) const override {
    return std::vector<PunctTag>(words.size() + 1, P::kO);
  }
};

TEST(Tagger, EmptyInputSkipsModel) {
  WrongLengthTagger t;
  EXPECT_TRUE(t.tag({}).empty());
}

TEST(Tagger, ContractViolationThrows) {
  WrongLengthTagger t;
  EXPECT_THROW(t.tag(make_words({"a"})), Error);
}

TEST(AllOTagger, TagsEverythingO) {
  AllOTagger t;
  EXPECT_EQ(t.tag(make_words({"a", "b", "c"})), (std::vector<P>{P::kO, P::kO, P::kO}));
}

TrainingRow table_one_row() {
  TrainingRow row;
  row.words = make_words({"it", "can", "happen", "in", "new", "york", "city", "right", "so", "what"});
  row.tags = {P::kO, P::kO, P::kO, P::kO, P::kO, P::kO, P::kComma, P::kQMark, P::kO, P::kPeriod};
  row.source_id = "t1";
  return row;
}

TEST(OracleTagger, RecoversReferenceSlices) {
  OracleTagger oracle(table_one_row());
  EXPECT_EQ(oracle.tag(make_words({"city", "right", "so"})),
            (std::vector<P>{P::kComma, P::kQMark, P::kO}));
  EXPECT_EQ(oracle.tag(make_words({"it", "can", "happen"})),
            (std::vector<P>{P::kO, P::kO, P::kO}));
}

TEST(OracleTagger, UnknownWindowIsAllO) {
  OracleTagger oracle(table_one_row());
  EXPECT_EQ(oracle.tag(make_words({"right", "city"})), (std::vector<P>{P::kO, P::kO}));
}

TEST(OracleTagger, AmbiguousPositionsFallBackToO) {
  TrainingRow row;
  row.words = make_words({"yes", "ok", "yes", "ok"});
  row.tags = {P::kO, P::kPeriod, P::kO, P::kComma};
  OracleTagger oracle(row);
  EXPECT_EQ(oracle.occurrences(make_words({"yes", "ok"})), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(oracle.tag(make_words({"yes", "ok"})), (std::vector<P>{P::kO, P::kO}));
  // The stream offset disambiguates.
  EXPECT_EQ(oracle.tag(make_words({"yes", "ok"}), {.stream_offset = 2}),
            (std::vector<P>{P::kO, P::kComma}));
  EXPECT_EQ(oracle.tag(make_words({"yes", "ok"}), {.stream_offset = 0}),
            (std::vector<P>{P::kO, P::kPeriod}));
}

TEST(OracleTagger, MismatchedOffsetFallsBackToLookup) {
  OracleTagger oracle(table_one_row());
  EXPECT_EQ(oracle.tag(make_words({"city", "right"}), {.stream_offset = 0}),
            (std::vector<P>{P::kComma, P::kQMark}));
}

TEST(OracleTagger, LengthMismatchThrows) {
  EXPECT_THROW(OracleTagger(make_words({"a"}), std::vector<P>{}), InvalidArgument);
}

// Any contiguous slice of the reference, with its offset, gets the
// reference tags back.
TEST(OracleProperty, ExactRecoveryOfSlices) {
  for (int c = 0; c < 300; ++c) {
    Rng rng(testing::case_seed(31, c));
    SCOPED_TRACE("case " + std::to_string(c));
    auto row = testing::random_row(rng, 1, 60);
    OracleTagger oracle(row);
    const std::size_t begin = rng.uniform(0, row.words.size() - 1);
    const std::size_t len = rng.uniform(1, row.words.size() - begin);
    std::span<const Word> slice(row.words.data() + begin, len);
    std::vector<P> expect(row.tags.begin() + begin, row.tags.begin() + begin + len);
    EXPECT_EQ(oracle.tag(slice, {.stream_offset = begin}), expect);
    // Without the offset, a tag is either the reference one or O.
    auto blind = oracle.tag(slice);
    for (std::size_t k = 0; k < len; ++k) {
      EXPECT_TRUE(blind[k] == expect[k] || blind[k] == P::kO);
    }
    if (oracle.occurrences(slice).size() == 1) EXPECT_EQ(blind, expect);
  }
}

// Every implementation returns one tag per word, deterministically.
TEST(TaggerProperty, LengthAndDeterminism) {
  Rng setup(7);
  std::vector<TrainingRow> corpus;
  for (int i = 0; i < 20; ++i) corpus.push_back(testing::random_punctuated_row(setup, 3, 8));
  PerceptronTagger perceptron(perceptron_train(corpus, {.epochs = 2, .seed = 1}));
  OracleTagger oracle = OracleTagger::from_rows(corpus);
  AllOTagger all_o;
  testing::HashTagger hashed(5);
  testing::LastWordPeriodTagger last;
  const std::vector<const Tagger*> taggers = {&perceptron, &oracle, &all_o, &hashed, &last};
  for (int c = 0; c < 250; ++c) {
    Rng rng(testing::case_seed(32, c));
    auto words = testing::random_words(rng, rng.uniform(1, 40));
    for (const Tagger* t : taggers) {
      auto a = t->tag(words);
      ASSERT_EQ(a.size(), words.size());
      EXPECT_EQ(a, t->tag(words));
    }
  }
}

}  // namespace
}  // namespace streampunct
