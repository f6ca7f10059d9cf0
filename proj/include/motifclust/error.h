// Copyright 2026 The motifclust Authors
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

#ifndef MOTIFCLUST_ERROR_H_
#define MOTIFCLUST_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motifclust {

// Malformed edge-list or community-file input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Invalid generator or run parameters.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The graph has no instance of the requested clique motif.
class NoMotifError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No peel prefix satisfies vol(S) <= vol(V \ S) with vol(S) > 0.
class NoAdmissiblePrefixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search requested on a graph above the vertex limit.
class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quantity whose denominator is zero was requested.
class UndefinedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace motifclust

#endif  // MOTIFCLUST_ERROR_H_
