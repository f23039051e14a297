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

// Machine-readable reports: plot data for checkpoint curves and the
// behavior breakdown, the similarity table, and case bundles for manual
// inspection.
//
// Output files (all byte-stable for identical inputs):
//   report.json      full report, including per-example records
//   checkpoints.csv  step,n,syntax_validity,exact_match,copy_rate,
//                    modification_rate,ned_mean,ned_median,ned_std,eval_loss
//   behavior.csv     class,count,percentage
//   table1.csv       metric,mean,median,std
//   cases.json       case bundle (inspect only)
// Reals are written with six decimals, ties to even.

#ifndef REPAIRLENS_REPORT_H_
#define REPAIRLENS_REPORT_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "repairlens/corpus.h"
#include "repairlens/metrics.h"
#include "repairlens/parser.h"
#include "repairlens/syntax.h"
#include "repairlens/tracking.h"

namespace repairlens {

inline constexpr std::string_view kToolVersion = "0.1.0";

inline constexpr std::string_view kCheckpointsCsvHeader =
    "step,n,syntax_validity,exact_match,copy_rate,modification_rate,ned_mean,"
    "ned_median,ned_std,eval_loss";
inline constexpr std::string_view kBehaviorCsvHeader = "class,count,percentage";
inline constexpr std::string_view kTable1CsvHeader = "metric,mean,median,std";

struct BehaviorShare {
  std::size_t count = 0;
  double percentage = 0.0;

  bool operator==(const BehaviorShare&) const = default;
};

using BehaviorDistribution = std::array<BehaviorShare, 3>;  // by BehaviorClass

// Throws InputError on an empty list.
BehaviorDistribution ComputeBehaviorDistribution(std::span<const EvalRecord> records);

struct Table1Row {
  std::string metric;
  SummaryStats stats;
};

// "Exact Match" (per-example 0/1) and "Normalized Edit Distance" rows.
std::vector<Table1Row> BuildTable1(std::span<const EvalRecord> records);

struct InputDigest {
  std::string role;       // "corpus", "predictions", "loss_log", ...
  std::string file_name;  // base name only, so reports do not embed paths
  std::string sha256;
};

InputDigest DigestFile(std::string role, const std::filesystem::path& path);

struct Provenance {
  std::string tool_version = std::string(kToolVersion);
  std::uint64_t seed = 42;
  std::string command;
  std::string parser_binding;
  std::size_t sample_size = 0;
  std::int64_t interval_steps = 0;
  bool fixed_sample = false;
  std::string em_normalization = "strict";
  std::string ned_unit = "character";
  std::vector<InputDigest> inputs;
};

struct EvalReport {
  CorpusStats corpus_stats;
  CheckpointSeries series;
  std::map<std::int64_t, std::vector<EvalRecord>> records;  // by step
  std::optional<CheckpointRecord> final;  // last checkpoint
  BehaviorDistribution behavior_counts{};
  std::vector<Table1Row> table1;
  double modification_rate = 0.0;  // share of outputs differing from input
  std::size_t near_copy_count = 0;
  std::size_t empty_prediction_count = 0;
  std::optional<double> steps_per_epoch;
  Provenance provenance;
};

// Assembles the report; the last checkpoint drives the behavior counts,
// the table and the rates. Throws InputError on duplicate steps.
EvalReport BuildReport(const CorpusStats& corpus_stats,
                       std::vector<CheckpointEvaluation> checkpoints,
                       Provenance provenance,
                       std::optional<double> steps_per_epoch = std::nullopt);

nlohmann::ordered_json ReportToJson(const EvalReport& report);
std::string CheckpointsCsv(const CheckpointSeries& series);
std::string BehaviorCsv(const EvalReport& report);
std::string Table1Csv(std::span<const Table1Row> rows);

// Writes report.json, checkpoints.csv, behavior.csv and table1.csv into
// `out_dir`, creating it if needed. Failure -> EnvironmentError.
void EmitReport(const EvalReport& report, const std::filesystem::path& out_dir);

struct Case {
  std::string example_id;
  std::string buggy;
  std::string fixed;
  std::string prediction;
  BehaviorClass behavior = BehaviorClass::kModification;
  SyntaxVerdict verdict;
  std::string diff_vs_buggy;  // buggy -> prediction
  std::string diff_vs_fixed;  // prediction -> fixed
  std::vector<std::string> candidates;  // lower beam ranks, by rank
};

struct CaseBundle {
  std::int64_t step = 0;
  std::uint64_t seed = 0;
  std::vector<Case> cases;  // sorted by example id
};

std::string CaseDiffVsBuggy(const Case& c);
std::string CaseDiffVsFixed(const Case& c);

// Seeded sample of k evaluated examples with texts, verdicts and diffs.
// `predictions` must hold the rank-0 prediction behind every record.
// Throws InputError when k exceeds the number of records.
CaseBundle ExtractCases(const Corpus& corpus, std::span<const Prediction> predictions,
                        std::span<const EvalRecord> records, std::size_t k,
                        std::uint64_t seed, JavaParser& parser);

nlohmann::ordered_json CasesToJson(const CaseBundle& bundle);
void EmitCases(const CaseBundle& bundle, const std::filesystem::path& out_dir);

}  // namespace repairlens

#endif  // REPAIRLENS_REPORT_H_
