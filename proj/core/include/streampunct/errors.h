// streampunct/errors.h
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

#ifndef STREAMPUNCT_ERRORS_H_
#define STREAMPUNCT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace streampunct {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on arguments was violated (length mismatch, bad index,
// out-of-range probability, invalid word text, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input data could not be parsed (model files, JSON records, tag names).
class FormatError : public Error {
 public:
  using Error::Error;
};

// A model file carries the right magic but an unsupported version.
class VersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

// Segments arrived with a gap or repeat in seq_no.
class StreamOrderError : public Error {
 public:
  using Error::Error;
};

// A segment was pushed into the window state of a different session.
class SessionMismatchError : public Error {
 public:
  using Error::Error;
};

// Hypothesis and reference word streams differ, so positional scoring is
// impossible.
class AlignmentError : public Error {
 public:
  AlignmentError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// The external tagger process misbehaved (died, answered garbage, reported an
// error record).
class ExternalTaggerError : public Error {
 public:
  using Error::Error;
};

}  // namespace streampunct

#endif  // STREAMPUNCT_ERRORS_H_
