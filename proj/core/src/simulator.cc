// core/src/simulator.cc
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

#include "streampunct/simulator.h"

#include <charconv>
#include <cstdio>
#include <random>

#include "streampunct/errors.h"

namespace streampunct {

namespace {

constexpr std::string_view kPolicyKinds =
    "valid policy kinds: fixed:<k>, break:<p>, noise:<p_break_inside>,<p_miss>";

bool parse_probability(std::string_view s, double& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && out >= 0.0 &&
         out <= 1.0;
}

[[noreturn]] void bad_policy(std::string_view text, std::string_view why) {
  throw InvalidArgument("bad segment policy '" + std::string(text) + "' (" +
                        std::string(why) + "); " + std::string(kPolicyKinds));
}

bool in_unit_interval(double p) { return p >= 0.0 && p <= 1.0; }

std::string format_prob(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", p);
  return buf;
}

}  // namespace

void SegmentPolicy::validate() const {
  if (max_segment_words < 1) {
    throw InvalidArgument("max_segment_words must be at least 1");
  }
  if (const auto* f = std::get_if<FixedCut>(&kind); f && f->k < 1) {
    throw InvalidArgument("fixed policy needs k >= 1");
  }
  if (const auto* b = std::get_if<BreakProb>(&kind); b && !in_unit_interval(b->p)) {
    throw InvalidArgument("break probability must lie in [0, 1]");
  }
  if (const auto* n = std::get_if<BoundaryNoise>(&kind);
      n && (!in_unit_interval(n->p_break_inside) ||
            !in_unit_interval(n->p_miss_boundary))) {
    throw InvalidArgument("noise probabilities must lie in [0, 1]");
  }
}

SegmentPolicy parse_policy(std::string_view text, std::uint64_t seed,
                           std::size_t max_segment_words) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) bad_policy(text, "missing ':'");
  std::string_view kind = text.substr(0, colon);
  std::string_view args = text.substr(colon + 1);

  SegmentPolicy policy;
  policy.seed = seed;
  policy.max_segment_words = max_segment_words;
  if (kind == "fixed") {
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(args.data(), args.data() + args.size(), k);
    if (ec != std::errc() || ptr != args.data() + args.size() || k < 1) {
      bad_policy(text, "fixed needs an integer k >= 1");
    }
    policy.kind = FixedCut{k};
  } else if (kind == "break") {
    double p = 0.0;
    if (!parse_probability(args, p)) bad_policy(text, "break needs p in [0, 1]");
    policy.kind = BreakProb{p};
  } else if (kind == "noise") {
    auto comma = args.find(',');
    double inside = 0.0, miss = 0.0;
    if (comma == std::string_view::npos ||
        !parse_probability(args.substr(0, comma), inside) ||
        !parse_probability(args.substr(comma + 1), miss)) {
      bad_policy(text, "noise needs two probabilities in [0, 1]");
    }
    policy.kind = BoundaryNoise{inside, miss};
  } else {
    bad_policy(text, "unknown kind '" + std::string(kind) + "'");
  }
  policy.validate();
  return policy;
}

std::string policy_to_string(const SegmentPolicy& policy) {
  if (const auto* f = std::get_if<FixedCut>(&policy.kind)) {
    return "fixed:" + std::to_string(f->k);
  }
  if (const auto* b = std::get_if<BreakProb>(&policy.kind)) {
    return "break:" + format_prob(b->p);
  }
  const auto& n = std::get<BoundaryNoise>(policy.kind);
  return "noise:" + format_prob(n.p_break_inside) + "," +
         format_prob(n.p_miss_boundary);
}

std::vector<Segment> simulate_segments(std::span<const Word> words,
                                       const SegmentPolicy& policy,
                                       const std::string& session_id,
                                       std::span<const PunctTag> reference_tags) {
  if (words.empty()) throw InvalidArgument("simulate_segments: no words");
  policy.validate();
  const auto* noise = std::get_if<BoundaryNoise>(&policy.kind);
  if (noise && reference_tags.size() != words.size()) {
    throw InvalidArgument(
        "simulate_segments: noise policy needs one reference tag per word");
  }

  std::mt19937_64 rng(policy.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto coin = [&](double p) {
    // Exact at the ends so p = 0 never and p = 1 always cuts.
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return unit(rng) < p;
  };

  std::vector<Segment> out;
  Segment current{session_id, 0, {}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    current.words.push_back(words[i]);
    bool cut = false;
    if (const auto* f = std::get_if<FixedCut>(&policy.kind)) {
      cut = current.words.size() >= f->k;
    } else if (const auto* b = std::get_if<BreakProb>(&policy.kind)) {
      cut = coin(b->p);
    } else {
      cut = is_terminal(reference_tags[i]) ? !coin(noise->p_miss_boundary)
                                           : coin(noise->p_break_inside);
    }
    if (current.words.size() >= policy.max_segment_words) cut = true;
    if (cut && i + 1 < words.size()) {
      out.push_back(std::move(current));
      current = Segment{session_id, out.size(), {}};
    }
  }
  out.push_back(std::move(current));
  return out;
}

}  // namespace streampunct
