// streampunct/synthetic.h
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

#ifndef STREAMPUNCT_SYNTHETIC_H_
#define STREAMPUNCT_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace streampunct {

struct SyntheticCorpusOptions {
  std::size_t paragraphs = 100;
  std::size_t min_sentences = 3;
  std::size_t max_sentences = 8;
  std::uint64_t seed = 0;
};

// Template-generated written-form English: statements, comma-bearing
// clauses and several question forms, capitalized and punctuated, one
// paragraph per string. Comma placement is a fixed function of the template,
// so identical word sequences always carry identical punctuation.
std::vector<std::string> generate_synthetic_corpus(
    const SyntheticCorpusOptions& options);

}  // namespace streampunct

#endif  // STREAMPUNCT_SYNTHETIC_H_
