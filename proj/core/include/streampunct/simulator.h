// streampunct/simulator.h
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

#ifndef STREAMPUNCT_SIMULATOR_H_
#define STREAMPUNCT_SIMULATOR_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "streampunct/types.h"

namespace streampunct {

// Cut every k words.
struct FixedCut {
  std::size_t k = 1;
};

// Cut after each word with probability p (a pause).
struct BreakProb {
  double p = 0.0;
};

// Cut at true sentence ends with probability 1 - p_miss_boundary and inside
// sentences with probability p_break_inside (hesitation pauses).
struct BoundaryNoise {
  double p_break_inside = 0.0;
  double p_miss_boundary = 0.0;
};

// Decoder-like segmentation in word units. max_segment_words is the forced
// timeout, roughly 40 s of speech at ~3 words per second.
struct SegmentPolicy {
  std::variant<FixedCut, BreakProb, BoundaryNoise> kind = FixedCut{};
  std::uint64_t seed = 0;
  std::size_t max_segment_words = 120;

  void validate() const;
};

// Parses "fixed:<k>", "break:<p>" or "noise:<p_break_inside>,<p_miss>".
// Throws InvalidArgument naming the valid kinds on anything else.
SegmentPolicy parse_policy(std::string_view text, std::uint64_t seed = 0,
                           std::size_t max_segment_words = 120);

std::string policy_to_string(const SegmentPolicy& policy);

// Splits `words` into non-empty segments numbered densely from 0. The noise
// policy needs the reference tags (one per word); other policies ignore
// `reference_tags`. Throws InvalidArgument on empty input, an invalid
// policy, or missing tags for the noise policy.
std::vector<Segment> simulate_segments(std::span<const Word> words,
                                       const SegmentPolicy& policy,
                                       const std::string& session_id,
                                       std::span<const PunctTag> reference_tags = {});

}  // namespace streampunct

#endif  // STREAMPUNCT_SIMULATOR_H_
