// core/src/external_tagger.cc
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

#include "streampunct/external_tagger.h"

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <csignal>
#include <cstring>

#include <nlohmann/json.hpp>

#include "streampunct/errors.h"

namespace streampunct {

using json = nlohmann::ordered_json;

std::string encode_tag_request(std::int64_t id, std::span<const Word> words) {
  json j;
  j["id"] = id;
  j["words"] = json::array();
  for (const auto& w : words) j["words"].push_back(w.text());
  return j.dump();
}

std::string encode_tag_response(const TagResponse& response) {
  json j;
  j["id"] = response.id;
  if (response.error) {
    j["error"] = *response.error;
  } else {
    j["tags"] = json::array();
    for (PunctTag t : response.tags) j["tags"].push_back(tag_name(t));
  }
  return j.dump();
}

TagResponse decode_tag_response(std::string_view line) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw FormatError("tagger response is not a JSON object");
  }
  TagResponse r;
  if (!j.contains("id") || !j["id"].is_number_integer()) {
    throw FormatError("tagger response lacks an integer id");
  }
  r.id = j["id"].get<std::int64_t>();
  if (j.contains("error")) {
    r.error = j["error"].is_string() ? j["error"].get<std::string>()
                                     : j["error"].dump();
    return r;
  }
  if (!j.contains("tags") || !j["tags"].is_array()) {
    throw FormatError("tagger response lacks a tags array");
  }
  for (const auto& t : j["tags"]) {
    if (!t.is_string()) throw FormatError("tag entry is not a string");
    r.tags.push_back(parse_tag(t.get<std::string>()));
  }
  return r;
}

namespace {

void write_all(int fd, std::string_view data) {
  while (!data.empty()) {
    ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ExternalTaggerError(std::string("writing to tagger process: ") +
                                std::strerror(errno));
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

}  // namespace

ExternalTagger::ExternalTagger(const std::string& command) : command_(command) {
  static std::once_flag ignore_sigpipe;
  std::call_once(ignore_sigpipe, [] { std::signal(SIGPIPE, SIG_IGN); });

  int in_pipe[2], out_pipe[2];
  if (::pipe(in_pipe) != 0) throw ExternalTaggerError("pipe() failed");
  if (::pipe(out_pipe) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw ExternalTaggerError("pipe() failed");
  }
  pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    throw ExternalTaggerError("fork() failed");
  }
  if (pid == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  ::fcntl(in_pipe[1], F_SETFD, FD_CLOEXEC);
  ::fcntl(out_pipe[0], F_SETFD, FD_CLOEXEC);
  child_ = pid;
  to_child_ = in_pipe[1];
  from_child_ = ::fdopen(out_pipe[0], "r");
  if (!from_child_) {
    ::close(out_pipe[0]);
    ::close(to_child_);
    ::waitpid(child_, nullptr, 0);
    throw ExternalTaggerError("fdopen() failed");
  }
}

ExternalTagger::~ExternalTagger() {
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_) std::fclose(from_child_);
  if (child_ > 0) {
    int status = 0;
    while (::waitpid(child_, &status, 0) < 0 && errno == EINTR) {
    }
  }
}

std::vector<PunctTag> ExternalTagger::do_tag(std::span<const Word> words,
                                             const TagContext&) const {
  std::lock_guard<std::mutex> lock(mu_);
  const std::int64_t id = next_id_++;
  write_all(to_child_, encode_tag_request(id, words) + "\n");

  std::string line;
  int c;
  while ((c = std::fgetc(from_child_)) != EOF && c != '\n') {
    line += static_cast<char>(c);
  }
  if (c == EOF && line.empty()) {
    throw ExternalTaggerError("tagger process '" + command_ +
                              "' closed its output");
  }
  TagResponse r;
  try {
    r = decode_tag_response(line);
  } catch (const FormatError& e) {
    throw ExternalTaggerError(std::string("bad tagger response: ") + e.what());
  }
  if (r.id != id) {
    throw ExternalTaggerError("tagger answered id " + std::to_string(r.id) +
                              " to request " + std::to_string(id));
  }
  if (r.error) throw ExternalTaggerError("tagger error: " + *r.error);
  if (r.tags.size() != words.size()) {
    throw ExternalTaggerError("tagger returned " + std::to_string(r.tags.size()) +
                              " tags for " + std::to_string(words.size()) +
                              " words");
  }
  return r.tags;
}

}  // namespace streampunct
