// Copyright 2026 The repairlens Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Error taxonomy shared by every module. The CLI maps each family onto a
// process exit status: InputError and UsageError exit 1, EnvironmentError
// exits 2.

#ifndef REPAIRLENS_ERRORS_H_
#define REPAIRLENS_ERRORS_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace repairlens {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad data supplied by the caller: malformed records, unknown ids, empty
// inputs where a non-empty one is required.
class InputError : public Error {
 public:
  explicit InputError(const std::string& message) : Error(message) {}
  InputError(const std::string& message, std::size_t line)
      : Error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

  // 1-based line number in the offending file, when the error is tied to one.
  std::optional<std::size_t> line() const { return line_; }

 private:
  std::optional<std::size_t> line_;
};

// The runtime cannot do its job regardless of the inputs: the grammar
// binding is unavailable, an output directory is unwritable.
class EnvironmentError : public Error {
 public:
  using Error::Error;
};

// Malformed command line.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace repairlens

#endif  // REPAIRLENS_ERRORS_H_
