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

#include "repairlens/metrics.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "repairlens/edit_distance.h"
#include "repairlens/errors.h"
#include "repairlens/syntax.h"
#include "repairlens/text.h"

namespace repairlens {

std::size_t Levenshtein(std::string_view a, std::string_view b) {
  const std::vector<char32_t> ca = DecodeUtf8(a);
  const std::vector<char32_t> cb = DecodeUtf8(b);
  return SequenceLevenshtein<char32_t>(ca, cb);
}

std::size_t TokenLevenshtein(std::string_view a, std::string_view b) {
  const std::vector<std::string_view> ta = WhitespaceTokens(a);
  const std::vector<std::string_view> tb = WhitespaceTokens(b);
  return SequenceLevenshtein<std::string_view>(ta, tb);
}

std::string_view BehaviorName(BehaviorClass behavior) {
  switch (behavior) {
    case BehaviorClass::kExactMatch:
      return "ExactMatch";
    case BehaviorClass::kCopy:
      return "Copy";
    case BehaviorClass::kModification:
      return "Modification";
  }
  return "Modification";
}

std::optional<BehaviorClass> ParseBehavior(std::string_view name) {
  for (BehaviorClass b : kAllBehaviors) {
    if (BehaviorName(b) == name) return b;
  }
  return std::nullopt;
}

bool ExactMatch(std::string_view prediction, std::string_view fixed,
                EmNormalization mode) {
  if (mode == EmNormalization::kWhitespace) {
    return CollapseWhitespace(prediction) == CollapseWhitespace(fixed);
  }
  return prediction == fixed;
}

double NormalizedEditDistance(std::string_view prediction, std::string_view fixed,
                              const MetricOptions& options) {
  std::string pred_norm;
  std::string fixed_norm;
  if (options.em == EmNormalization::kWhitespace) {
    pred_norm = CollapseWhitespace(prediction);
    fixed_norm = CollapseWhitespace(fixed);
    prediction = pred_norm;
    fixed = fixed_norm;
  }
  std::size_t distance = 0;
  std::size_t longest = 0;
  if (options.ned_unit == NedUnit::kToken) {
    distance = TokenLevenshtein(prediction, fixed);
    longest = std::max(WhitespaceTokens(prediction).size(),
                       WhitespaceTokens(fixed).size());
  } else {
    distance = Levenshtein(prediction, fixed);
    longest = std::max(CharLength(prediction), CharLength(fixed));
  }
  if (longest == 0) return 0.0;
  return static_cast<double>(distance) / static_cast<double>(longest);
}

BehaviorClass ClassifyBehavior(std::string_view buggy, std::string_view prediction,
                               std::string_view fixed, EmNormalization mode) {
  if (ExactMatch(prediction, fixed, mode)) return BehaviorClass::kExactMatch;
  if (prediction == buggy) return BehaviorClass::kCopy;
  return BehaviorClass::kModification;
}

bool IsNearCopy(std::string_view buggy, std::string_view prediction) {
  return prediction != buggy &&
         CollapseWhitespace(prediction) == CollapseWhitespace(buggy);
}

EvalRecord EvaluatePrediction(const RepairExample& example,
                              const Prediction& prediction, JavaParser& parser,
                              const MetricOptions& options) {
  const SyntaxVerdict verdict = CheckSyntax(prediction.text, parser);
  EvalRecord record;
  record.example_id = example.id;
  record.step = prediction.step;
  record.behavior =
      ClassifyBehavior(example.buggy, prediction.text, example.fixed, options.em);
  record.syntax_valid = verdict.valid;
  record.syntax_error_count = verdict.error_count;
  record.ned = record.behavior == BehaviorClass::kExactMatch
                   ? 0.0
                   : NormalizedEditDistance(prediction.text, example.fixed, options);
  record.pred_len = CharLength(prediction.text);
  record.empty_prediction = verdict.empty_input;
  record.near_copy = IsNearCopy(example.buggy, prediction.text);
  return record;
}

double ModificationRate(std::span<const EvalRecord> records) {
  if (records.empty()) throw InputError("modification rate of an empty set is undefined");
  const auto modified = std::count_if(records.begin(), records.end(), [](const EvalRecord& r) {
    return r.behavior != BehaviorClass::kCopy;
  });
  return 100.0 * static_cast<double>(modified) / static_cast<double>(records.size());
}

SummaryStats Aggregate(std::span<const double> values) {
  if (values.empty()) throw InputError("cannot summarize an empty list");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  SummaryStats stats;
  stats.n = n;
  stats.min = sorted.front();
  stats.max = sorted.back();
  stats.median = n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  double sum = 0.0;
  for (double v : values) sum += v;
  stats.mean = sum / static_cast<double>(n);
  double squares = 0.0;
  for (double v : values) squares += (v - stats.mean) * (v - stats.mean);
  stats.stddev = std::sqrt(squares / static_cast<double>(n));
  return stats;
}

}  // namespace repairlens
