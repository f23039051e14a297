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

// Per-prediction repair metrics and the copy / modify / fix classifier.

#ifndef REPAIRLENS_METRICS_H_
#define REPAIRLENS_METRICS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "repairlens/corpus.h"
#include "repairlens/parser.h"

namespace repairlens {

enum class EmNormalization {
  kStrict,      // byte equality
  kWhitespace,  // equality after trimming and collapsing whitespace runs
};

enum class NedUnit {
  kCharacter,
  kToken,  // whitespace tokens
};

struct MetricOptions {
  EmNormalization em = EmNormalization::kStrict;
  NedUnit ned_unit = NedUnit::kCharacter;
};

// Precedence when several apply: ExactMatch, then Copy, then Modification.
enum class BehaviorClass { kExactMatch = 0, kCopy = 1, kModification = 2 };

inline constexpr std::array<BehaviorClass, 3> kAllBehaviors = {
    BehaviorClass::kExactMatch, BehaviorClass::kCopy,
    BehaviorClass::kModification};

std::string_view BehaviorName(BehaviorClass behavior);
std::optional<BehaviorClass> ParseBehavior(std::string_view name);

bool ExactMatch(std::string_view prediction, std::string_view fixed,
                EmNormalization mode = EmNormalization::kStrict);

// levenshtein / max(len), in [0, 1]; 0 when both are empty. Under
// kWhitespace normalization both texts are collapsed first so that an
// exact match always has distance 0.
double NormalizedEditDistance(std::string_view prediction, std::string_view fixed,
                              const MetricOptions& options = {});

BehaviorClass ClassifyBehavior(std::string_view buggy, std::string_view prediction,
                               std::string_view fixed,
                               EmNormalization mode = EmNormalization::kStrict);

// Equal to `buggy` once whitespace is collapsed, but not byte-identical.
// Reported next to the Copy class, never merged into it.
bool IsNearCopy(std::string_view buggy, std::string_view prediction);

struct EvalRecord {
  std::string example_id;
  std::int64_t step = 0;
  BehaviorClass behavior = BehaviorClass::kModification;
  bool syntax_valid = false;
  std::size_t syntax_error_count = 0;
  double ned = 0.0;
  std::size_t pred_len = 0;  // characters
  bool empty_prediction = false;
  bool near_copy = false;

  bool operator==(const EvalRecord&) const = default;
};

// Runs syntax checking and every semantic metric on one prediction.
EvalRecord EvaluatePrediction(const RepairExample& example,
                              const Prediction& prediction, JavaParser& parser,
                              const MetricOptions& options = {});

// 100 * (#behavior != Copy) / n, so exact matches count as modifications.
// Throws InputError on an empty list.
double ModificationRate(std::span<const EvalRecord> records);

struct SummaryStats {
  double mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;  // population standard deviation
  double min = 0.0;
  double max = 0.0;
  std::size_t n = 0;

  bool operator==(const SummaryStats&) const = default;
};

// Median of an even-length list is the mean of the two central values.
// Throws InputError on an empty list.
SummaryStats Aggregate(std::span<const double> values);

}  // namespace repairlens

#endif  // REPAIRLENS_METRICS_H_
