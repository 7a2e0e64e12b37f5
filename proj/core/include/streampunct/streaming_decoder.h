// streampunct/streaming_decoder.h
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

#ifndef STREAMPUNCT_STREAMING_DECODER_H_
#define STREAMPUNCT_STREAMING_DECODER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "streampunct/tagger.h"
#include "streampunct/types.h"

namespace streampunct {

struct DecoderConfig {
  // Longest unfinalized buffer; anything longer is force-emitted.
  std::size_t max_buffer_words = 250;
  // A boundary on the last word of the window waits until a later word shows
  // that a new sentence has begun.
  bool emit_requires_following_word = true;
  // Tag written onto the last word of a forced sentence.
  PunctTag forced_terminal = PunctTag::kPeriod;
  bool capitalize_output = true;

  // Throws InvalidArgument if max_buffer_words is 0 or forced_terminal is
  // not terminal.
  void validate() const;
};

// Per-session streaming state. The buffer holds words after the last emitted
// boundary; their tags are recomputed every step and never stored.
struct WindowState {
  std::string session_id;
  std::vector<Word> buffer;
  std::uint64_t next_seq_expected = 0;
  std::size_t emitted_word_count = 0;

  static WindowState start(std::string session_id);
};

struct EmissionBatch {
  std::vector<TaggedSentence> sentences;
  bool is_flush = false;
};

// One step of the dynamic decoding window: tags buffer ++ segment.words,
// emits every sentence that ends at an eligible boundary and keeps the rest
// as the new buffer. A remainder longer than max_buffer_words is emitted as a
// single forced sentence. Throws SessionMismatchError or StreamOrderError
// (state untouched) if the segment does not continue this session.
EmissionBatch push_segment(WindowState& state, const Segment& segment,
                           const Tagger& tagger, const DecoderConfig& config);

// End of session: emits the buffer in full, closing an unterminated tail as
// a forced sentence.
EmissionBatch flush(WindowState& state, const Tagger& tagger,
                    const DecoderConfig& config);

// Per-segment punctuation with no carry-over: every segment is split at its
// terminal tags and its tail is force-terminated. `stream_offset` is passed
// through to the tagger.
EmissionBatch baseline_punctuate(const Segment& segment, const Tagger& tagger,
                                 const DecoderConfig& config,
                                 std::optional<std::size_t> stream_offset = {});

enum class DecodeMode { kStreaming, kBaseline };

// Decodes one session in either mode, enforcing seq_no order in both.
class SessionDecoder {
 public:
  SessionDecoder(std::string session_id, const Tagger& tagger,
                 DecoderConfig config, DecodeMode mode);

  EmissionBatch push(const Segment& segment);
  // Streaming: flush(). Baseline: nothing is pending, returns an empty batch.
  EmissionBatch finish();

  const WindowState& state() const { return state_; }
  DecodeMode mode() const { return mode_; }

 private:
  const Tagger& tagger_;
  DecoderConfig config_;
  DecodeMode mode_;
  WindowState state_;
};

// Folds a whole session; segments must share one session id and be ordered by
// seq_no from 0.
std::vector<TaggedSentence> run_session(std::span<const Segment> segments,
                                        const Tagger& tagger,
                                        const DecoderConfig& config,
                                        DecodeMode mode);

}  // namespace streampunct

#endif  // STREAMPUNCT_STREAMING_DECODER_H_
