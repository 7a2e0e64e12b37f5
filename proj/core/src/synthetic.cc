// core/src/synthetic.cc
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

#include "streampunct/synthetic.h"

#include <array>
#include <random>
#include <string_view>

#include "streampunct/errors.h"

namespace streampunct {

namespace {

constexpr std::array<std::string_view, 15> kSubjects = {
    "the manager",   "my sister", "our team",  "the old doctor",
    "a young student", "the driver", "my neighbor", "the committee",
    "his father",    "the new teacher", "she", "he", "we", "they", "I"};

constexpr std::array<std::string_view, 14> kVerbsPast = {
    "reviewed", "painted", "sold",     "cleaned",   "ordered", "found",
    "repaired", "delivered", "opened", "visited",   "wrote",   "carried",
    "moved",    "checked"};

constexpr std::array<std::string_view, 14> kVerbsBase = {
    "review", "paint",  "sell",    "clean", "order", "find",  "repair",
    "deliver", "open",  "visit",   "write", "carry", "move",  "check"};

constexpr std::array<std::string_view, 12> kObjects = {
    "the report",    "the kitchen",     "a small car",    "the letters",
    "the front door", "an old bicycle", "the garden",     "the new budget",
    "three boxes",   "the contract",    "the stairs",     "the windows"};

constexpr std::array<std::string_view, 10> kPlaces = {
    "in the morning",   "after lunch",     "near the station",
    "on Monday",        "before the meeting", "in New York City",
    "at the office",    "with great care", "last week",
    "during the storm"};

constexpr std::array<std::string_view, 10> kOpeners = {
    "however", "meanwhile", "in fact",  "yesterday", "of course",
    "unfortunately", "honestly", "as usual", "by the way", "well"};

constexpr std::array<std::string_view, 3> kConjunctions = {"and", "but", "so"};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  template <std::size_t N>
  std::string pick(const std::array<std::string_view, N>& items) {
    std::uniform_int_distribution<std::size_t> d(0, N - 1);
    return std::string(items[d(rng_)]);
  }

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    std::uniform_int_distribution<std::size_t> d(lo, hi);
    return d(rng_);
  }

  std::string sentence() {
    std::string s;
    switch (uniform(0, 9)) {
      case 0:
      case 1:
        s = pick(kSubjects) + " " + pick(kVerbsPast) + " " + pick(kObjects) +
            " " + pick(kPlaces) + ".";
        break;
      case 2:
        s = pick(kOpeners) + ", " + pick(kSubjects) + " " + pick(kVerbsPast) +
            " " + pick(kObjects) + ".";
        break;
      case 3:
        s = pick(kSubjects) + " " + pick(kVerbsPast) + " " + pick(kObjects) +
            ", " + pick(kConjunctions) + " " + pick(kSubjects) + " " +
            pick(kVerbsPast) + " " + pick(kObjects) + ".";
        break;
      case 4:
        s = "did " + pick(kSubjects) + " " + pick(kVerbsBase) + " " +
            pick(kObjects) + " " + pick(kPlaces) + "?";
        break;
      case 5:
        s = pick(kSubjects) + " " + pick(kVerbsPast) + " " + pick(kObjects) +
            ", right?";
        break;
      case 6:
        s = "can you " + pick(kVerbsBase) + " " + pick(kObjects) + "?";
        break;
      case 7:
        s = "it can happen " + pick(kPlaces) + ".";
        break;
      case 8:
        s = pick(kSubjects) + " said that " + pick(kSubjects) + " " +
            pick(kVerbsPast) + " " + pick(kObjects) + " " + pick(kPlaces) + ".";
        break;
      default:
        s = "where is " + pick(kObjects) + "?";
        break;
    }
    if (s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<std::string> generate_synthetic_corpus(
    const SyntheticCorpusOptions& options) {
  if (options.min_sentences < 1 || options.max_sentences < options.min_sentences) {
    throw InvalidArgument("synthetic corpus: need 1 <= min_sentences <= max_sentences");
  }
  Generator gen(options.seed);
  std::vector<std::string> out;
  out.reserve(options.paragraphs);
  for (std::size_t p = 0; p < options.paragraphs; ++p) {
    std::size_t n = gen.uniform(options.min_sentences, options.max_sentences);
    std::string para;
    for (std::size_t k = 0; k < n; ++k) {
      if (k) para += ' ';
      para += gen.sentence();
    }
    out.push_back(std::move(para));
  }
  return out;
}

}  // namespace streampunct
