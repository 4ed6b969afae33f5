// Copyright 2026 The SRLScore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SRLSCORE_ERRORS_H_
#define SRLSCORE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srlscore {

// Malformed interchange text. Carries the byte offset of the failure.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string &message, std::size_t byte_offset)
      : std::runtime_error(message), byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Well-formed input that violates a data-model invariant. The message names
// the offending sentence/frame/cluster index.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input file could not be opened or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid scoring or run configuration (bad weights, missing embeddings...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Correlation is undefined because one of the inputs is constant.
class UndefinedCorrelationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace srlscore

#endif  // SRLSCORE_ERRORS_H_
