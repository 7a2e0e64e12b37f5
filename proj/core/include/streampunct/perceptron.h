// streampunct/perceptron.h
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

#ifndef STREAMPUNCT_PERCEPTRON_H_
#define STREAMPUNCT_PERCEPTRON_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "streampunct/tagger.h"
#include "streampunct/types.h"

namespace streampunct {

// Word-level averaged-perceptron punctuation classifier over a window of
// neighboring words.
//
// A model starts out mutable (weights may be set); finalize() freezes it.
// Only finalized models can tag or be saved. perceptron_train() and load()
// both return finalized models.
class PerceptronModel {
 public:
  using WeightRow = std::array<double, kNumTags>;
  using WeightTable = std::unordered_map<std::string, WeightRow>;

  static constexpr std::string_view kMagic = "STREAMPUNCT-PERCEPTRON";
  static constexpr std::string_view kVersion = "v1";

  explicit PerceptronModel(std::size_t window_before = 4,
                           std::size_t window_after = 4);

  std::size_t window_before() const { return window_before_; }
  std::size_t window_after() const { return window_after_; }
  int epochs_trained() const { return epochs_trained_; }
  const std::optional<std::size_t>& vocab_truncation() const {
    return vocab_truncation_;
  }
  bool finalized() const { return finalized_; }
  const WeightTable& weights() const { return weights_; }

  // Mutators; all throw InvalidArgument once finalized.
  void set_weight(const std::string& feature, PunctTag tag, double value);
  void set_epochs_trained(int epochs);
  void set_vocab_truncation(std::optional<std::size_t> n);
  // Drops all-zero rows and freezes the model.
  void finalize();

  // Feature strings for position i (see perceptron_features()).
  std::vector<std::string> features(std::span<const Word> words,
                                    std::size_t i) const;

  // Per-class score of a feature list.
  WeightRow score(std::span<const std::string> features) const;

  // Argmax per word; ties go to the lower class (O < COMMA < PERIOD < QMARK).
  // Throws InvalidArgument on an unfinalized model.
  std::vector<PunctTag> tag(std::span<const Word> words) const;

  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  // Throws VersionError on a recognized magic with an unknown version and
  // FormatError on anything else malformed, including empty input.
  static PerceptronModel load(std::istream& in);
  static PerceptronModel load(const std::filesystem::path& path);

 private:
  void require_mutable() const;

  std::size_t window_before_;
  std::size_t window_after_;
  int epochs_trained_ = 0;
  std::optional<std::size_t> vocab_truncation_;
  bool finalized_ = false;
  WeightTable weights_;
};

// Feature template. Always present: "bias", "w0=<word>", "shape=<shape>",
// "pos=<bucket>", and "w-k=" / "w+k=" for k up to the window sizes ("<pad>"
// past either edge). "bigram=<w0>_<w+1>" requires window_after >= 1 and
// "bigram-1=<w-1>_<w0>" requires window_before >= 1, so a zero window leaks
// no context from that side. Words are ASCII lower-cased.
std::vector<std::string> perceptron_features(std::span<const Word> words,
                                             std::size_t i,
                                             std::size_t window_before,
                                             std::size_t window_after);

// Collapsed character-class shape: letters 'w', digits 'd', other bytes kept
// ("covid-19" -> "w-d").
std::string word_shape(std::string_view text);

struct PerceptronTrainOptions {
  int epochs = 5;
  std::uint64_t seed = 0;
  std::size_t window_before = 4;
  std::size_t window_after = 4;
  // Keep only the N features with the largest total absolute weight.
  std::optional<std::size_t> vocab_truncation;
};

// Averaged-perceptron training, one multiclass decision per token. Rows are
// reshuffled every epoch with a generator seeded by options.seed, so the
// result is a deterministic function of (corpus, options). Throws
// InvalidArgument on an empty corpus, epochs < 1, or a row whose words and
// tags differ in length or are empty.
PerceptronModel perceptron_train(std::span<const TrainingRow> corpus,
                                 const PerceptronTrainOptions& options);

// Fraction of tokens whose predicted tag equals the gold tag.
double token_accuracy(const PerceptronModel& model,
                      std::span<const TrainingRow> rows);

// Tagger adapter over a finalized model.
class PerceptronTagger final : public Tagger {
 public:
  explicit PerceptronTagger(PerceptronModel model);
  const PerceptronModel& model() const { return model_; }

 protected:
  std::vector<PunctTag> do_tag(std::span<const Word> words,
                               const TagContext& context) const override;

 private:
  PerceptronModel model_;
};

}  // namespace streampunct

#endif  // STREAMPUNCT_PERCEPTRON_H_
