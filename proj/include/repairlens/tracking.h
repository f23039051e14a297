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

// Checkpoint-by-checkpoint evaluation of prediction dumps.

#ifndef REPAIRLENS_TRACKING_H_
#define REPAIRLENS_TRACKING_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "repairlens/corpus.h"
#include "repairlens/metrics.h"
#include "repairlens/parser.h"

namespace repairlens {

struct CheckpointRecord {
  std::int64_t step = 0;
  std::size_t n = 0;
  double syntax_validity_pct = 0.0;
  double exact_match_pct = 0.0;
  double copy_pct = 0.0;
  double modification_pct = 0.0;  // disjoint from exact matches
  SummaryStats ned_stats;
  std::optional<double> eval_loss;   // ingested, never computed
  std::optional<double> train_loss;  // ingested, never computed

  bool operator==(const CheckpointRecord&) const = default;
};

struct CheckpointEvaluation {
  CheckpointRecord record;
  std::vector<EvalRecord> records;  // sorted by example id
};

struct EvalOptions {
  MetricOptions metrics;
  std::size_t jobs = 1;  // worker threads for per-example evaluation
};

// Rank-0 predictions only. Every example must have exactly one; extra
// predictions for examples outside `examples` are ignored.
CheckpointEvaluation EvaluateCheckpoint(std::span<const RepairExample> examples,
                                        std::span<const Prediction> predictions,
                                        JavaParser& parser,
                                        const MetricOptions& options = {});

// Same result, fanned out over `options.jobs` workers with one parser each.
CheckpointEvaluation EvaluateCheckpoint(std::span<const RepairExample> examples,
                                        std::span<const Prediction> predictions,
                                        const ParserFactory& make_parser,
                                        const EvalOptions& options);

// Folds per-example records (any order) into a checkpoint summary. Records
// are reduced in example-id order. Throws InputError on an empty list.
CheckpointRecord SummarizeCheckpoint(std::int64_t step,
                                     std::span<const EvalRecord> records);

class CheckpointSeries {
 public:
  CheckpointSeries() = default;

  std::span<const CheckpointRecord> records() const { return records_; }
  bool empty() const { return records_.empty(); }
  std::size_t size() const { return records_.size(); }

 private:
  friend CheckpointSeries BuildSeries(std::vector<CheckpointRecord> records);
  std::vector<CheckpointRecord> records_;
};

// Sorts by step. Throws InputError on a duplicate step.
CheckpointSeries BuildSeries(std::vector<CheckpointRecord> records);

// Summary of syntax validity over checkpoints with step >= from_step.
SummaryStats SeriesStats(const CheckpointSeries& series, std::int64_t from_step);

struct LossEntry {
  std::optional<double> train_loss;
  std::optional<double> eval_loss;
};

// Line-delimited {step, train_loss?, eval_loss?} records.
std::map<std::int64_t, LossEntry> ParseLossLog(std::string_view content,
                                               std::string_view source);
std::map<std::int64_t, LossEntry> LoadLossLog(const std::filesystem::path& path);

// Attaches logged losses to records with a matching step.
void AttachLosses(std::vector<CheckpointRecord>& records,
                  const std::map<std::int64_t, LossEntry>& losses);

}  // namespace repairlens

#endif  // REPAIRLENS_TRACKING_H_
