// core/src/streaming_decoder.cc
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

#include "streampunct/streaming_decoder.h"

#include <utility>

#include "streampunct/errors.h"

namespace streampunct {

namespace {

void check_continues(const WindowState& state, const Segment& segment) {
  if (segment.session_id != state.session_id) {
    throw SessionMismatchError("segment for session '" + segment.session_id +
                               "' pushed into session '" + state.session_id +
                               "'");
  }
  if (segment.seq_no != state.next_seq_expected) {
    throw StreamOrderError(
        "session '" + state.session_id + "': expected seq_no " +
        std::to_string(state.next_seq_expected) + ", got " +
        std::to_string(segment.seq_no));
  }
}

// Emits [begin, b] for every terminal b in [0, limit) and returns the index
// just past the last emitted word.
std::size_t split_at_boundaries(std::span<const Word> words,
                                std::span<const PunctTag> tags,
                                std::size_t limit,
                                std::vector<TaggedSentence>& out) {
  std::size_t begin = 0;
  for (std::size_t i = 0; i < limit; ++i) {
    if (!is_terminal(tags[i])) continue;
    out.push_back(make_sentence(words.subspan(begin, i + 1 - begin),
                                tags.subspan(begin, i + 1 - begin),
                                /*forced=*/false));
    begin = i + 1;
  }
  return begin;
}

// Splits everything: every terminal closes a sentence and an unterminated
// tail becomes a forced one.
std::vector<TaggedSentence> finalize_all(std::span<const Word> words,
                                         std::span<const PunctTag> tags,
                                         const DecoderConfig& config) {
  std::vector<TaggedSentence> out;
  std::size_t begin = split_at_boundaries(words, tags, words.size(), out);
  if (begin < words.size()) {
    out.push_back(make_sentence(words.subspan(begin), tags.subspan(begin),
                                /*forced=*/true, config.forced_terminal));
  }
  return out;
}

}  // namespace

void DecoderConfig::validate() const {
  if (max_buffer_words < 1) {
    throw InvalidArgument("max_buffer_words must be at least 1");
  }
  if (!is_terminal(forced_terminal)) {
    throw InvalidArgument("forced_terminal must be PERIOD or QMARK");
  }
}

WindowState WindowState::start(std::string session_id) {
  WindowState s;
  s.session_id = std::move(session_id);
  return s;
}

EmissionBatch push_segment(WindowState& state, const Segment& segment,
                           const Tagger& tagger, const DecoderConfig& config) {
  config.validate();
  check_continues(state, segment);
  EmissionBatch batch;
  if (segment.words.empty()) {
    ++state.next_seq_expected;
    return batch;
  }

  std::vector<Word> window;
  window.reserve(state.buffer.size() + segment.words.size());
  window.insert(window.end(), state.buffer.begin(), state.buffer.end());
  window.insert(window.end(), segment.words.begin(), segment.words.end());
  const auto tags = tagger.tag(window, {.stream_offset = state.emitted_word_count});

  // A terminal on the final word is only eligible when no following word is
  // required.
  const std::size_t limit = config.emit_requires_following_word
                                ? window.size() - 1
                                : window.size();
  const std::span<const Word> words(window);
  const std::span<const PunctTag> tag_span(tags);
  std::size_t begin = split_at_boundaries(words, tag_span, limit, batch.sentences);

  std::vector<Word> remainder(window.begin() + static_cast<std::ptrdiff_t>(begin),
                              window.end());
  std::size_t emitted = begin;
  if (remainder.size() > config.max_buffer_words) {
    batch.sentences.push_back(make_sentence(words.subspan(begin),
                                            tag_span.subspan(begin),
                                            /*forced=*/true,
                                            config.forced_terminal));
    emitted = window.size();
    remainder.clear();
  }

  state.buffer = std::move(remainder);
  state.emitted_word_count += emitted;
  ++state.next_seq_expected;
  return batch;
}

EmissionBatch flush(WindowState& state, const Tagger& tagger,
                    const DecoderConfig& config) {
  config.validate();
  EmissionBatch batch;
  batch.is_flush = true;
  if (state.buffer.empty()) return batch;
  const auto tags =
      tagger.tag(state.buffer, {.stream_offset = state.emitted_word_count});
  batch.sentences = finalize_all(state.buffer, tags, config);
  state.emitted_word_count += state.buffer.size();
  state.buffer.clear();
  return batch;
}

EmissionBatch baseline_punctuate(const Segment& segment, const Tagger& tagger,
                                 const DecoderConfig& config,
                                 std::optional<std::size_t> stream_offset) {
  config.validate();
  EmissionBatch batch;
  if (segment.words.empty()) return batch;
  const auto tags = tagger.tag(segment.words, {.stream_offset = stream_offset});
  batch.sentences = finalize_all(segment.words, tags, config);
  return batch;
}

SessionDecoder::SessionDecoder(std::string session_id, const Tagger& tagger,
                               DecoderConfig config, DecodeMode mode)
    : tagger_(tagger),
      config_(config),
      mode_(mode),
      state_(WindowState::start(std::move(session_id))) {
  config_.validate();
}

EmissionBatch SessionDecoder::push(const Segment& segment) {
  if (mode_ == DecodeMode::kStreaming) {
    return push_segment(state_, segment, tagger_, config_);
  }
  check_continues(state_, segment);
  auto batch =
      baseline_punctuate(segment, tagger_, config_, state_.emitted_word_count);
  state_.emitted_word_count += segment.words.size();
  ++state_.next_seq_expected;
  return batch;
}

EmissionBatch SessionDecoder::finish() {
  if (mode_ == DecodeMode::kStreaming) return flush(state_, tagger_, config_);
  EmissionBatch batch;
  batch.is_flush = true;
  return batch;
}

std::vector<TaggedSentence> run_session(std::span<const Segment> segments,
                                        const Tagger& tagger,
                                        const DecoderConfig& config,
                                        DecodeMode mode) {
  std::vector<TaggedSentence> out;
  if (segments.empty()) return out;
  SessionDecoder decoder(segments.front().session_id, tagger, config, mode);
  auto append = [&out](EmissionBatch&& b) {
    for (auto& s : b.sentences) out.push_back(std::move(s));
  };
  for (const auto& seg : segments) append(decoder.push(seg));
  append(decoder.finish());
  return out;
}

}  // namespace streampunct
