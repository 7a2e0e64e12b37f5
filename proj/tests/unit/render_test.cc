// tests/unit/render_test.cc
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

#include "streampunct/render.h"

#include <gtest/gtest.h>

#include <cctype>

#include "test_support.h"

namespace streampunct {
namespace {

using P = PunctTag;
using testing::Rng;

TEST(Render, TableOneSentences) {
  auto a1 = make_sentence(make_words({"it", "can", "happen"}),
                          std::vector<P>{P::kO, P::kO, P::kPeriod}, false);
  EXPECT_EQ(render_sentence(a1, true), "It can happen.");

  auto a4 = make_sentence(
      make_words({"it", "can", "happen", "in", "new", "york", "city", "right"}),
      std::vector<P>{P::kO, P::kO, P::kO, P::kO, P::kO, P::kO, P::kComma, P::kQMark},
      false);
  EXPECT_EQ(render_sentence(a4, true), "It can happen in new york city, right?");
}

TEST(Render, SingleWordNoCapitalize) {
  auto s = make_sentence(make_words({"ok"}), std::vector<P>{P::kPeriod}, false);
  EXPECT_EQ(render_sentence(s, false), "ok.");
}

TEST(Render, DigitFirstIsLeftAlone) {
  auto s = make_sentence(make_words({"42", "things"}),
                         std::vector<P>{P::kO, P::kPeriod}, false);
  EXPECT_EQ(render_sentence(s, true), "42 things.");
}

// Dropping the tag symbol from each token and lower-casing recovers the word
// texts. Only the appended symbol goes: words may hold mid-word periods.
TEST(RenderProperty, StripsBackToWords) {
  for (int c = 0; c < 300; ++c) {
    Rng rng(testing::case_seed(11, c));
    auto row = testing::random_row(rng, 1, 30);
    SCOPED_TRACE("case " + std::to_string(c));
    std::string text = render_tagged(row.words, row.tags, rng.chance(0.5));
    ASSERT_EQ(text.find("  "), std::string::npos);
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(' ', start);
      if (end == std::string::npos) end = text.size();
      tokens.push_back(text.substr(start, end - start));
      start = end + 1;
    }
    ASSERT_EQ(tokens.size(), row.words.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      std::string t = tokens[i];
      if (row.tags[i] != P::kO) {
        ASSERT_EQ(t.back(), tag_symbol(row.tags[i])[0]);
        t.pop_back();
      }
      for (char& ch : t) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      EXPECT_EQ(t, row.words[i].text());
    }
  }
}

}  // namespace
}  // namespace streampunct
