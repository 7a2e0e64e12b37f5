// core/src/perceptron.cc
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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include "streampunct/errors.h"

namespace streampunct {

namespace {

constexpr std::string_view kPad = "<pad>";

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string position_bucket(std::size_t i) {
  if (i < 4) return std::to_string(i);
  if (i < 8) return "4-7";
  if (i < 16) return "8-15";
  return "16+";
}

PunctTag argmax(const PerceptronModel::WeightRow& s) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < kNumTags; ++c) {
    if (s[c] > s[best]) best = c;
  }
  return kAllTags[best];
}

std::string format_weight(double w) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos
                                         ? std::string_view::npos
                                         : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& value) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

void check_rows(std::span<const TrainingRow> rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].words.size() != rows[r].tags.size()) {
      throw InvalidArgument("training row " + std::to_string(r) + " has " +
                            std::to_string(rows[r].words.size()) +
                            " words but " +
                            std::to_string(rows[r].tags.size()) + " tags");
    }
    if (rows[r].words.empty()) {
      throw InvalidArgument("training row " + std::to_string(r) + " is empty");
    }
  }
}

}  // namespace

std::string word_shape(std::string_view text) {
  std::string out;
  for (unsigned char c : text) {
    char cls;
    if (c >= '0' && c <= '9') {
      cls = 'd';
    } else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80) {
      cls = 'w';
    } else {
      cls = static_cast<char>(c);
    }
    if (out.empty() || out.back() != cls) out += cls;
  }
  return out;
}

std::vector<std::string> perceptron_features(std::span<const Word> words,
                                             std::size_t i,
                                             std::size_t window_before,
                                             std::size_t window_after) {
  if (i >= words.size()) {
    throw InvalidArgument("perceptron_features: position " +
                          std::to_string(i) + " out of range for " +
                          std::to_string(words.size()) + " words");
  }
  auto word_at = [&](std::ptrdiff_t j) -> std::string {
    if (j < 0 || j >= static_cast<std::ptrdiff_t>(words.size())) {
      return std::string(kPad);
    }
    return lower_ascii(words[static_cast<std::size_t>(j)].text());
  };
  const auto pos = static_cast<std::ptrdiff_t>(i);
  const std::string w0 = word_at(pos);

  std::vector<std::string> f;
  f.reserve(6 + window_before + window_after);
  f.emplace_back("bias");
  f.push_back("w0=" + w0);
  for (std::size_t k = 1; k <= window_before; ++k) {
    f.push_back("w-" + std::to_string(k) + "=" +
                word_at(pos - static_cast<std::ptrdiff_t>(k)));
  }
  for (std::size_t k = 1; k <= window_after; ++k) {
    f.push_back("w+" + std::to_string(k) + "=" +
                word_at(pos + static_cast<std::ptrdiff_t>(k)));
  }
  f.push_back("shape=" + word_shape(words[i].text()));
  if (window_after >= 1) f.push_back("bigram=" + w0 + "_" + word_at(pos + 1));
  if (window_before >= 1) {
    f.push_back("bigram-1=" + word_at(pos - 1) + "_" + w0);
  }
  f.push_back("pos=" + position_bucket(i));
  return f;
}

// ---------------------------------------------------------------------------
// PerceptronModel

PerceptronModel::PerceptronModel(std::size_t window_before,
                                 std::size_t window_after)
    : window_before_(window_before), window_after_(window_after) {}

void PerceptronModel::require_mutable() const {
  if (finalized_) throw InvalidArgument("perceptron model is finalized");
}

void PerceptronModel::set_weight(const std::string& feature, PunctTag tag,
                                 double value) {
  require_mutable();
  weights_[feature][tag_index(tag)] = value;
}

void PerceptronModel::set_epochs_trained(int epochs) {
  require_mutable();
  epochs_trained_ = epochs;
}

void PerceptronModel::set_vocab_truncation(std::optional<std::size_t> n) {
  require_mutable();
  vocab_truncation_ = n;
}

void PerceptronModel::finalize() {
  require_mutable();
  std::erase_if(weights_, [](const auto& kv) {
    return std::all_of(kv.second.begin(), kv.second.end(),
                       [](double w) { return w == 0.0; });
  });
  finalized_ = true;
}

std::vector<std::string> PerceptronModel::features(std::span<const Word> words,
                                                   std::size_t i) const {
  return perceptron_features(words, i, window_before_, window_after_);
}

PerceptronModel::WeightRow PerceptronModel::score(
    std::span<const std::string> features) const {
  WeightRow s{};
  for (const auto& f : features) {
    auto it = weights_.find(f);
    if (it == weights_.end()) continue;
    for (std::size_t c = 0; c < kNumTags; ++c) s[c] += it->second[c];
  }
  return s;
}

std::vector<PunctTag> PerceptronModel::tag(std::span<const Word> words) const {
  if (!finalized_) {
    throw InvalidArgument("cannot tag with an unfinalized perceptron model");
  }
  std::vector<PunctTag> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    out.push_back(argmax(score(features(words, i))));
  }
  return out;
}

void PerceptronModel::save(std::ostream& out) const {
  if (!finalized_) {
    throw InvalidArgument("cannot save an unfinalized perceptron model");
  }
  out << kMagic << ' ' << kVersion << '\n';
  out << "window_before=" << window_before_
      << " window_after=" << window_after_ << " epochs=" << epochs_trained_;
  if (vocab_truncation_) out << " vocab_truncation=" << *vocab_truncation_;
  out << '\n';

  std::vector<const WeightTable::value_type*> rows;
  rows.reserve(weights_.size());
  for (const auto& kv : weights_) rows.push_back(&kv);
  std::sort(rows.begin(), rows.end(),
            [](auto* a, auto* b) { return a->first < b->first; });
  for (const auto* kv : rows) {
    for (PunctTag t : kAllTags) {
      double w = kv->second[tag_index(t)];
      if (w == 0.0) continue;
      out << kv->first << '\t' << tag_name(t) << '\t' << format_weight(w)
          << '\n';
    }
  }
  if (!out) throw Error("failed writing perceptron model");
}

void PerceptronModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  save(out);
}

PerceptronModel PerceptronModel::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.empty()) {
    throw FormatError("model file is empty or has no header line");
  }
  const std::string magic_prefix = std::string(kMagic) + " ";
  if (!line.starts_with(magic_prefix)) {
    throw FormatError("model file does not start with '" +
                      std::string(kMagic) + "'");
  }
  std::string version = line.substr(magic_prefix.size());
  if (version != kVersion) {
    throw VersionError("unsupported model version '" + version +
                       "' (expected " + std::string(kVersion) + ")");
  }

  if (!std::getline(in, line)) {
    throw FormatError("model file truncated: missing window line");
  }
  std::optional<std::size_t> before, after, truncation;
  int epochs = 0;
  std::istringstream fields(line);
  std::string kv;
  while (fields >> kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw FormatError("malformed model parameter '" + kv + "'");
    }
    std::string_view key(kv.data(), eq);
    std::string_view value(kv.data() + eq + 1, kv.size() - eq - 1);
    std::size_t n = 0;
    if (key == "epochs") {
      if (!parse_number(value, epochs)) {
        throw FormatError("malformed epochs value '" + std::string(value) + "'");
      }
      continue;
    }
    if (!parse_number(value, n)) {
      throw FormatError("malformed value for '" + std::string(key) + "'");
    }
    if (key == "window_before") {
      before = n;
    } else if (key == "window_after") {
      after = n;
    } else if (key == "vocab_truncation") {
      truncation = n;
    }
  }
  if (!before || !after) {
    throw FormatError("model file lacks window_before/window_after");
  }

  PerceptronModel model(*before, *after);
  model.epochs_trained_ = epochs;
  model.vocab_truncation_ = truncation;
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto parts = split_tabs(line);
    if (parts.size() != 3 || parts[0].empty()) {
      throw FormatError("model line " + std::to_string(line_no) +
                        ": expected <feature>\\t<TAG>\\t<weight>");
    }
    PunctTag t = parse_tag(parts[1]);
    double w = 0.0;
    if (!parse_number(parts[2], w) || !std::isfinite(w)) {
      throw FormatError("model line " + std::to_string(line_no) +
                        ": bad weight '" + std::string(parts[2]) + "'");
    }
    auto& row = model.weights_[std::string(parts[0])];
    if (row[tag_index(t)] != 0.0) {
      throw FormatError("model line " + std::to_string(line_no) +
                        ": duplicate weight");
    }
    row[tag_index(t)] = w;
  }
  model.finalize();
  return model;
}

PerceptronModel PerceptronModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open model file " + path.string());
  return load(in);
}

// ---------------------------------------------------------------------------
// Training

namespace {

// Lazily-averaged weights for one feature.
struct AveragedRow {
  std::array<double, kNumTags> weight{};
  std::array<double, kNumTags> total{};
  std::array<std::int64_t, kNumTags> stamp{};

  void add(std::size_t c, double delta, std::int64_t now) {
    total[c] += static_cast<double>(now - stamp[c]) * weight[c];
    stamp[c] = now;
    weight[c] += delta;
  }
  double average(std::size_t c, std::int64_t now) const {
    double t = total[c] + static_cast<double>(now - stamp[c]) * weight[c];
    return t / static_cast<double>(now);
  }
};

}  // namespace

PerceptronModel perceptron_train(std::span<const TrainingRow> corpus,
                                 const PerceptronTrainOptions& options) {
  if (corpus.empty()) throw InvalidArgument("perceptron_train: empty corpus");
  if (options.epochs < 1) {
    throw InvalidArgument("perceptron_train: epochs must be >= 1");
  }
  check_rows(corpus);

  // Intern features once; training then works on integer ids.
  std::unordered_map<std::string, std::uint32_t> ids;
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<std::uint32_t>>> row_features(
      corpus.size());
  for (std::size_t r = 0; r < corpus.size(); ++r) {
    const auto& words = corpus[r].words;
    row_features[r].resize(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (auto& f : perceptron_features(words, i, options.window_before,
                                         options.window_after)) {
        auto [it, inserted] =
            ids.try_emplace(f, static_cast<std::uint32_t>(names.size()));
        if (inserted) names.push_back(std::move(f));
        row_features[r][i].push_back(it->second);
      }
    }
  }

  std::vector<AveragedRow> table(names.size());
  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(options.seed);
  std::int64_t step = 0;

  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t r : order) {
      const auto& gold = corpus[r].tags;
      for (std::size_t i = 0; i < gold.size(); ++i) {
        ++step;
        const auto& feats = row_features[r][i];
        std::array<double, kNumTags> s{};
        for (auto id : feats) {
          for (std::size_t c = 0; c < kNumTags; ++c) s[c] += table[id].weight[c];
        }
        // A gold class that only wins through the tie-break still counts as a
        // mistake, so separable patterns end up with a margin that survives
        // averaging.
        const std::size_t g = tag_index(gold[i]);
        std::size_t rival = g == 0 ? 1 : 0;
        for (std::size_t c = 0; c < kNumTags; ++c) {
          if (c != g && s[c] > s[rival]) rival = c;
        }
        if (s[g] > s[rival]) continue;
        const PunctTag guess = kAllTags[rival];
        for (auto id : feats) {
          table[id].add(tag_index(gold[i]), 1.0, step);
          table[id].add(tag_index(guess), -1.0, step);
        }
      }
    }
  }

  std::vector<std::uint32_t> keep(names.size());
  std::iota(keep.begin(), keep.end(), std::uint32_t{0});
  std::vector<PerceptronModel::WeightRow> averaged(names.size());
  for (std::size_t id = 0; id < names.size(); ++id) {
    for (std::size_t c = 0; c < kNumTags; ++c) {
      averaged[id][c] = table[id].average(c, step);
    }
  }
  if (options.vocab_truncation && *options.vocab_truncation < keep.size()) {
    auto mass = [&](std::uint32_t id) {
      double m = 0.0;
      for (double w : averaged[id]) m += std::abs(w);
      return m;
    };
    std::stable_sort(keep.begin(), keep.end(), [&](auto a, auto b) {
      double ma = mass(a), mb = mass(b);
      if (ma != mb) return ma > mb;
      return names[a] < names[b];
    });
    keep.resize(*options.vocab_truncation);
  }

  PerceptronModel model(options.window_before, options.window_after);
  for (auto id : keep) {
    for (PunctTag t : kAllTags) {
      double w = averaged[id][tag_index(t)];
      if (w != 0.0) model.set_weight(names[id], t, w);
    }
  }
  model.set_epochs_trained(options.epochs);
  model.set_vocab_truncation(options.vocab_truncation);
  model.finalize();
  return model;
}

double token_accuracy(const PerceptronModel& model,
                      std::span<const TrainingRow> rows) {
  check_rows(rows);
  std::size_t correct = 0, total = 0;
  for (const auto& row : rows) {
    auto hyp = model.tag(row.words);
    for (std::size_t i = 0; i < hyp.size(); ++i) correct += hyp[i] == row.tags[i];
    total += hyp.size();
  }
  return total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;
}

PerceptronTagger::PerceptronTagger(PerceptronModel model)
    : model_(std::move(model)) {
  if (!model_.finalized()) {
    throw InvalidArgument("PerceptronTagger requires a finalized model");
  }
}

std::vector<PunctTag> PerceptronTagger::do_tag(std::span<const Word> words,
                                               const TagContext&) const {
  return model_.tag(words);
}

}  // namespace streampunct
