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

// Command-line front end.

#ifndef REPAIRLENS_CLI_H_
#define REPAIRLENS_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "repairlens/corpus.h"
#include "repairlens/metrics.h"

namespace repairlens::cli {

enum class Command { kEval, kTrack, kAbstract, kCheck, kInspect, kStats };

std::string_view CommandName(Command command);

struct RunConfig {
  Command command = Command::kEval;

  std::filesystem::path corpus;
  std::filesystem::path codexglue_dir;
  std::filesystem::path predictions;
  std::filesystem::path loss_log;
  std::filesystem::path input;        // check: snippet records
  std::filesystem::path out_dir;
  std::filesystem::path export_path;  // stats: canonical corpus copy

  std::uint64_t seed = 42;
  std::size_t sample_size = 100;
  std::int64_t interval_steps = 500;
  bool fixed_sample = false;

  EmNormalization em = EmNormalization::kStrict;
  NedUnit ned_unit = NedUnit::kCharacter;
  bool strict_gaps = false;
  bool skip_unparseable = false;

  std::optional<std::int64_t> step;
  std::optional<Split> split;
  std::size_t cases = 10;
  std::string field = "code";
  std::optional<double> steps_per_epoch;

  std::size_t jobs = 1;
  std::string grammar = "tree-sitter-java";
};

// Raised for --help; carries the rendered help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// `args` excludes the program name. Throws UsageError on unknown flags,
// bad values or missing required paths.
RunConfig ParseArgs(std::span<const std::string> args);

// Executes a validated config. Returns 0 on success, 1 on input or usage
// errors, 2 on environment errors. Diagnostics go to `err` as one line.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

// ParseArgs + Run with the same exit-status mapping.
int Main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace repairlens::cli

#endif  // REPAIRLENS_CLI_H_
