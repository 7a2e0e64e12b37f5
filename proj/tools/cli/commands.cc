// tools/cli/commands.cc
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

#include "commands.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>

#include "records.h"
#include "streampunct/data_pipeline.h"
#include "streampunct/errors.h"
#include "streampunct/evaluation.h"
#include "streampunct/external_tagger.h"
#include "streampunct/oracle_tagger.h"
#include "streampunct/perceptron.h"
#include "streampunct/simulator.h"
#include "streampunct/streaming_decoder.h"
#include "streampunct/synthetic.h"
#include "streampunct/tokenizer.h"

namespace streampunct::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// Prefixes a message with the 1-based input line it came from.
class LineError : public Error {
 public:
  LineError(int code, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

class Input {
 public:
  Input(const std::string& path, std::istream& std_in) {
    if (path == "-") {
      stream_ = &std_in;
      return;
    }
    file_.open(path);
    if (!file_) throw FormatError("cannot open '" + path + "' for reading");
    stream_ = &file_;
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& std_out) {
    if (path == "-") {
      stream_ = &std_out;
      return;
    }
    file_.open(path);
    if (!file_) throw FormatError("cannot open '" + path + "' for writing");
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

std::vector<TrainingRow> load_rows(const std::string& path, std::istream& in) {
  Input input(path, in);
  return read_rows(input.get());
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

// ---- prepare ---------------------------------------------------------------

struct PrepareArgs {
  std::string corpus;
  std::string out_dir;
  std::size_t max_tokens = 250;
  std::uint64_t seed = 0;
  std::string vocab;
};

int cmd_prepare(const PrepareArgs& a, Streams s) {
  std::unique_ptr<SubwordTokenizer> tok;
  if (a.vocab.empty()) {
    tok = std::make_unique<WholeWordTokenizer>();
  } else {
    tok = std::make_unique<GreedyTokenizer>(GreedyTokenizer::from_file(a.vocab));
  }
  PrepareOptions opts;
  opts.max_tokens = a.max_tokens;
  opts.seed = a.seed;
  Input input(a.corpus, s.in);
  PreparedCorpus prepared = prepare_corpus(input.get(), *tok, opts);
  if (prepared.stats.rows == 0) throw FormatError("zero surviving rows");

  std::filesystem::path dir(a.out_dir);
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, auto&& fn) {
    std::ofstream f(dir / name);
    if (!f) throw FormatError("cannot write '" + (dir / name).string() + "'");
    fn(f);
  };
  write("train.jsonl", [&](std::ostream& f) { write_rows(f, prepared.split.train); });
  write("validation.jsonl",
        [&](std::ostream& f) { write_rows(f, prepared.split.validation); });
  const std::string stats = stats_to_json(prepared.stats);
  write("stats.json", [&](std::ostream& f) { f << stats << '\n'; });
  s.out << stats << '\n';
  return kExitOk;
}

// ---- train -----------------------------------------------------------------

struct TrainArgs {
  std::string rows;
  std::string model;
  int epochs = 5;
  std::size_t window_before = 4;
  std::size_t window_after = 4;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_features;
  std::string validation;
};

int cmd_train(const TrainArgs& a, Streams s) {
  if (a.epochs < 1) throw UsageError("--epochs must be at least 1");
  auto rows = load_rows(a.rows, s.in);
  if (rows.empty()) throw FormatError("no training rows in '" + a.rows + "'");
  PerceptronTrainOptions opts;
  opts.epochs = a.epochs;
  opts.seed = a.seed;
  opts.window_before = a.window_before;
  opts.window_after = a.window_after;
  opts.vocab_truncation = a.max_features;
  PerceptronModel model = perceptron_train(rows, opts);
  model.save(std::filesystem::path(a.model));
  s.out << "features " << model.weights().size() << '\n';
  s.out << "train_accuracy " << token_accuracy(model, rows) << '\n';
  if (!a.validation.empty()) {
    auto val = load_rows(a.validation, s.in);
    s.out << "validation_accuracy " << token_accuracy(model, val) << '\n';
  }
  return kExitOk;
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
  std::string input = "-";
  std::string policy;
  std::uint64_t seed = 0;
  std::string session_prefix;
  std::size_t max_segment_words = 120;
};

// Each session draws from its own stream so adding lines never changes the
// cuts of earlier ones.
std::uint64_t session_seed(std::uint64_t seed, std::size_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int cmd_simulate(const SimulateArgs& a, Streams s) {
  SegmentPolicy policy;
  try {
    policy = parse_policy(a.policy, a.seed, a.max_segment_words);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  Input input(a.input, s.in);
  std::string line;
  std::size_t line_no = 0;
  std::size_t session_index = 0;
  while (std::getline(input.get(), line)) {
    ++line_no;
    if (blank(line)) continue;
    TrainingRow row;
    try {
      if (line.find_first_not_of(" \t") != std::string::npos &&
          line[line.find_first_not_of(" \t")] == '{') {
        row = row_from_json(line);
      } else {
        auto cleaned = clean_paragraph(line);
        if (!cleaned) continue;
        row = strip_and_tag(*cleaned);
        row.source_id = "p" + std::to_string(line_no);
      }
    } catch (const Error& e) {
      throw LineError(kExitData, line_no, e.what());
    }
    SegmentPolicy p = policy;
    p.seed = session_seed(a.seed, session_index++);
    auto segments = simulate_segments(row.words, p, a.session_prefix + row.source_id,
                                      row.tags);
    for (const auto& seg : segments) s.out << segment_to_record(seg) << '\n';
  }
  return kExitOk;
}

// ---- run -------------------------------------------------------------------

struct RunArgs {
  std::string input = "-";
  std::string mode = "streaming";
  std::string model;
  std::string oracle;
  std::string external;
  std::size_t max_buffer_words = 250;
  bool emit_at_window_end = false;
  bool no_capitalize = false;
};

struct Session {
  std::unique_ptr<Tagger> own_tagger;
  std::unique_ptr<SessionDecoder> decoder;
};

int cmd_run(const RunArgs& a, Streams s) {
  const int sources = !a.model.empty() + !a.oracle.empty() + !a.external.empty();
  if (sources != 1) {
    throw UsageError("exactly one tagger source is required: --model, --oracle or --external");
  }
  DecodeMode mode;
  if (a.mode == "streaming") {
    mode = DecodeMode::kStreaming;
  } else if (a.mode == "baseline") {
    mode = DecodeMode::kBaseline;
  } else {
    throw UsageError("unknown --mode '" + a.mode + "' (valid: streaming, baseline)");
  }
  DecoderConfig config;
  config.max_buffer_words = a.max_buffer_words;
  config.emit_requires_following_word = !a.emit_at_window_end;
  config.capitalize_output = !a.no_capitalize;
  try {
    config.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }

  std::unique_ptr<Tagger> shared;
  std::unordered_map<std::string, std::vector<TrainingRow>> references;
  if (!a.model.empty()) {
    shared = std::make_unique<PerceptronTagger>(
        PerceptronModel::load(std::filesystem::path(a.model)));
  } else if (!a.external.empty()) {
    shared = std::make_unique<ExternalTagger>(a.external);
  } else {
    for (auto& row : load_rows(a.oracle, s.in)) {
      references[row.source_id].push_back(std::move(row));
    }
  }

  std::map<std::string, Session> sessions;
  std::vector<std::string> order;
  auto emit = [&](const std::string& id, const EmissionBatch& batch) {
    for (const auto& sentence : batch.sentences) {
      s.out << sentence_to_record(id, sentence, config.capitalize_output) << '\n';
    }
    if (!batch.sentences.empty()) s.out.flush();
  };

  Input input(a.input, s.in);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input.get(), line)) {
    ++line_no;
    if (blank(line)) continue;
    Segment seg;
    try {
      seg = segment_from_record(line);
    } catch (const Error& e) {
      throw LineError(kExitData, line_no, e.what());
    }
    auto it = sessions.find(seg.session_id);
    if (it == sessions.end()) {
      Session fresh;
      const Tagger* tagger = shared.get();
      if (!tagger) {
        auto ref = references.find(seg.session_id);
        if (ref == references.end()) {
          throw LineError(kExitData, line_no,
                          "no reference rows for session '" + seg.session_id + "'");
        }
        fresh.own_tagger = std::make_unique<OracleTagger>(
            OracleTagger::from_rows(ref->second));
        tagger = fresh.own_tagger.get();
      }
      fresh.decoder = std::make_unique<SessionDecoder>(seg.session_id, *tagger,
                                                       config, mode);
      it = sessions.emplace(seg.session_id, std::move(fresh)).first;
      order.push_back(seg.session_id);
    }
    EmissionBatch batch;
    try {
      batch = it->second.decoder->push(seg);
    } catch (const StreamOrderError& e) {
      throw LineError(kExitStreamOrder, line_no, e.what());
    }
    emit(seg.session_id, batch);
  }
  for (const auto& id : order) emit(id, sessions.at(id).decoder->finish());
  return kExitOk;
}

// ---- eval ------------------------------------------------------------------

struct EvalArgs {
  std::string reference;
  std::string hypothesis;
  bool round = false;
  std::string format = "table";
  double beta = 0.5;
};

int cmd_eval(const EvalArgs& a, Streams s) {
  if (a.format != "table" && a.format != "json") {
    throw UsageError("unknown --format '" + a.format + "' (valid: table, json)");
  }
  MetricConfig metric;
  metric.beta = a.beta;
  try {
    metric.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  std::vector<std::string> ref_order;
  std::unordered_map<std::string, std::vector<TrainingRow>> refs;
  for (auto& row : load_rows(a.reference, s.in)) {
    if (!refs.count(row.source_id)) ref_order.push_back(row.source_id);
    refs[row.source_id].push_back(std::move(row));
  }
  std::unordered_map<std::string, std::vector<TaggedSentence>> hyps;
  {
    Input input(a.hypothesis, s.in);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(input.get(), line)) {
      ++line_no;
      if (blank(line)) continue;
      try {
        auto rec = sentence_from_record(line);
        if (!refs.count(rec.session_id)) {
          throw FormatError("no reference rows for session '" + rec.session_id + "'");
        }
        hyps[rec.session_id].push_back(std::move(rec.sentence));
      } catch (const FormatError& e) {
        throw LineError(kExitData, line_no, e.what());
      }
    }
  }
  EvalCounts total;
  for (const auto& id : ref_order) {
    try {
      total += count_session(refs[id], hyps[id]);
    } catch (const AlignmentError& e) {
      throw AlignmentError("session '" + id + "': " + e.what(), e.position());
    }
  }
  EvalReport report = make_report(total, metric);
  if (a.format == "json") {
    s.out << report_to_json(report, a.round) << '\n';
  } else {
    s.out << report_to_table(report, a.round);
  }
  return kExitOk;
}

// ---- synth -----------------------------------------------------------------

struct SynthArgs {
  std::string out = "-";
  SyntheticCorpusOptions opts;
};

int cmd_synth(const SynthArgs& a, Streams s) {
  if (a.opts.min_sentences == 0 || a.opts.min_sentences > a.opts.max_sentences) {
    throw UsageError("need 1 <= --min-sentences <= --max-sentences");
  }
  Output output(a.out, s.out);
  for (const auto& p : generate_synthetic_corpus(a.opts)) output.get() << p << '\n';
  return kExitOk;
}

int fail(std::ostream& err, int code, const std::string& msg) {
  err << "streampunct: " << msg << '\n';
  return code;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err) {
  CLI::App app{"Streaming punctuation for ASR word streams", "streampunct"};
  app.require_subcommand(1);

  PrepareArgs prep;
  auto* prepare = app.add_subcommand("prepare", "Clean a corpus into train/validation rows");
  prepare->add_option("corpus", prep.corpus, "One paragraph per line ('-' for stdin)")->required();
  prepare->add_option("out_dir", prep.out_dir, "Directory for train.jsonl, validation.jsonl, stats.json")->required();
  prepare->add_option("--max-tokens", prep.max_tokens, "Subword token budget per row")->capture_default_str();
  prepare->add_option("--seed", prep.seed, "Validation split seed")->capture_default_str();
  prepare->add_option("--vocab", prep.vocab, "Subword vocabulary, one piece per line");

  TrainArgs tr;
  auto* train = app.add_subcommand("train", "Train an averaged-perceptron tagger");
  train->add_option("rows", tr.rows, "Training rows (JSONL)")->required();
  train->add_option("model", tr.model, "Output model file")->required();
  train->add_option("--epochs", tr.epochs)->capture_default_str();
  train->add_option("--window-before", tr.window_before)->capture_default_str();
  train->add_option("--window-after", tr.window_after)->capture_default_str();
  train->add_option("--seed", tr.seed)->capture_default_str();
  train->add_option("--max-features", tr.max_features, "Keep only the N heaviest features");
  train->add_option("--validation", tr.validation, "Rows to report token accuracy on");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Cut word streams into decoder segments");
  simulate->add_option("input", sim.input, "Rows (JSONL) or plain text, one session per line")->capture_default_str();
  simulate->add_option("--policy", sim.policy, "fixed:K | break:P | noise:A,B")->required();
  simulate->add_option("--seed", sim.seed)->capture_default_str();
  simulate->add_option("--session-prefix", sim.session_prefix);
  simulate->add_option("--max-segment-words", sim.max_segment_words)->capture_default_str();

  RunArgs run;
  auto* runc = app.add_subcommand("run", "Punctuate segment records");
  runc->add_option("--input", run.input, "Segment records ('-' for stdin)")->capture_default_str();
  runc->add_option("--mode", run.mode, "streaming | baseline")->capture_default_str();
  runc->add_option("--model", run.model, "Perceptron model file");
  runc->add_option("--oracle", run.oracle, "Reference rows; sessions match source_id");
  runc->add_option("--external", run.external, "Shell command speaking the tag protocol");
  runc->add_option("--max-buffer-words", run.max_buffer_words)->capture_default_str();
  runc->add_flag("--emit-at-window-end", run.emit_at_window_end,
                 "Allow a boundary on the last word of the window");
  runc->add_flag("--no-capitalize", run.no_capitalize);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Score sentence records against reference rows");
  eval->add_option("reference", ev.reference, "Reference rows (JSONL)")->required();
  eval->add_option("hypothesis", ev.hypothesis, "Sentence records ('-' for stdin)")->required();
  eval->add_flag("--round", ev.round, "Integer percents");
  eval->add_option("--format", ev.format, "table | json")->capture_default_str();
  eval->add_option("--beta", ev.beta, "Segmentation F-score beta")->capture_default_str();

  SynthArgs sy;
  auto* synth = app.add_subcommand("synth", "Generate a template corpus");
  synth->add_option("out", sy.out, "Output file ('-' for stdout)")->capture_default_str();
  synth->add_option("--paragraphs", sy.opts.paragraphs)->capture_default_str();
  synth->add_option("--min-sentences", sy.opts.min_sentences)->capture_default_str();
  synth->add_option("--max-sentences", sy.opts.max_sentences)->capture_default_str();
  synth->add_option("--seed", sy.opts.seed)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Streams s{in, out, err};
  try {
    if (*prepare) return cmd_prepare(prep, s);
    if (*train) return cmd_train(tr, s);
    if (*simulate) return cmd_simulate(sim, s);
    if (*runc) return cmd_run(run, s);
    if (*eval) return cmd_eval(ev, s);
    if (*synth) return cmd_synth(sy, s);
  } catch (const UsageError& e) {
    return fail(err, kExitUsage, e.what());
  } catch (const LineError& e) {
    return fail(err, e.code(), e.what());
  } catch (const StreamOrderError& e) {
    return fail(err, kExitStreamOrder, e.what());
  } catch (const SessionMismatchError& e) {
    return fail(err, kExitStreamOrder, e.what());
  } catch (const AlignmentError& e) {
    return fail(err, kExitData, std::string(e.what()) + " (word position " +
                                    std::to_string(e.position()) + ")");
  } catch (const FormatError& e) {
    return fail(err, kExitData, e.what());
  } catch (const InvalidArgument& e) {
    return fail(err, kExitData, e.what());
  } catch (const ExternalTaggerError& e) {
    return fail(err, kExitData, e.what());
  } catch (const std::exception& e) {
    return fail(err, kExitFailure, e.what());
  }
  return kExitUsage;
}

}  // namespace streampunct::cli
