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

// Bug-fix corpora and prediction dumps.
//
// Both file types are line-delimited JSON. Examples carry `id`, `buggy`,
// `fixed` and an optional `split` ("train" | "valid" | "test", default
// "test"). Predictions carry `id`, `step`, `prediction` and an optional
// `rank` (default 0).

#ifndef REPAIRLENS_CORPUS_H_
#define REPAIRLENS_CORPUS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace repairlens {

enum class Split { kTrain = 0, kValid = 1, kTest = 2 };

inline constexpr std::array<Split, 3> kAllSplits = {Split::kTrain, Split::kValid,
                                                    Split::kTest};

std::string_view SplitName(Split split);
std::optional<Split> ParseSplit(std::string_view name);

struct RepairExample {
  std::string id;
  std::string buggy;
  std::string fixed;
  Split split = Split::kTest;

  bool operator==(const RepairExample&) const = default;
};

struct Prediction {
  std::string example_id;
  std::int64_t step = 0;  // gradient updates at dump time
  std::string text;
  std::int64_t rank = 0;  // beam position, 0 = best

  bool operator==(const Prediction&) const = default;
};

struct CorpusStats {
  std::size_t n = 0;
  std::array<std::size_t, 3> n_per_split{};  // indexed by Split
  double mean_token_length = 0.0;            // whitespace tokens of `buggy`
  double identity_pair_fraction = 0.0;       // buggy == fixed, byte-exact
};

struct TrackingConfig {
  std::size_t sample_size = 100;
  std::int64_t interval_steps = 500;
  std::uint64_t seed = 42;
  // Draw one sample for every checkpoint instead of re-drawing per step.
  bool fixed_sample = false;

  // Throws InputError when a field is out of range.
  void Validate() const;
};

// A loaded corpus. Immutable once built, so it can be shared across workers.
class Corpus {
 public:
  Corpus() = default;
  // Throws InputError on an empty or duplicate id.
  explicit Corpus(std::vector<RepairExample> examples);

  std::span<const RepairExample> examples() const { return examples_; }
  std::size_t size() const { return examples_.size(); }
  const RepairExample* Find(std::string_view id) const;
  std::vector<RepairExample> InSplit(Split split) const;

 private:
  std::vector<RepairExample> examples_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Parses example records. `source` names the input in error messages.
std::vector<RepairExample> ParseExamples(std::string_view content,
                                         std::string_view source);
std::vector<RepairExample> LoadExamples(const std::filesystem::path& path);

// One record per line, keys in the order id, buggy, fixed, split.
std::string SerializeExamples(std::span<const RepairExample> examples);

// Reads the CodeXGLUE refinement layout: `<split>.buggy-fixed.buggy` and
// `<split>.buggy-fixed.fixed` for each split present in `dir`, paired by
// line. Ids are "<split>-<line index>".
std::vector<RepairExample> ImportCodeXGlue(const std::filesystem::path& dir);

std::vector<Prediction> ParsePredictions(std::string_view content,
                                         std::string_view source,
                                         const Corpus& corpus);
std::vector<Prediction> LoadPredictions(const std::filesystem::path& path,
                                        const Corpus& corpus);

// Predictions bucketed by step, ascending; file order is kept inside a bucket.
std::map<std::int64_t, std::vector<Prediction>> GroupByStep(
    std::span<const Prediction> predictions);

// Throws InputError on an empty list.
CorpusStats ComputeCorpusStats(std::span<const RepairExample> examples);

// min(sample_size, n) distinct examples, in input order, chosen by a draw
// keyed on (seed, step) -- or on seed alone under `fixed_sample`. `step`
// must be a non-negative multiple of `interval_steps`.
std::vector<RepairExample> SampleValidation(
    std::span<const RepairExample> examples, const TrackingConfig& config,
    std::int64_t step);

}  // namespace repairlens

#endif  // REPAIRLENS_CORPUS_H_
