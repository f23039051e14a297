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

#include "repairlens/corpus.h"

#include <algorithm>
#include <json.hpp>
#include <limits>
#include <set>
#include <tuple>

#include "repairlens/errors.h"
#include "repairlens/io.h"
#include "repairlens/sampling.h"
#include "repairlens/text.h"

namespace repairlens {

namespace {

using Json = nlohmann::json;

Json ParseRecord(const std::string& line, std::string_view source,
                 std::size_t line_no) {
  Json record;
  try {
    record = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string(source) + ": malformed record: " + e.what(),
                     line_no);
  }
  if (!record.is_object()) {
    throw InputError(std::string(source) + ": record is not an object",
                     line_no);
  }
  return record;
}

std::string RequireString(const Json& record, const char* key,
                          std::string_view source, std::size_t line_no) {
  const auto it = record.find(key);
  if (it == record.end() || !it->is_string()) {
    throw InputError(std::string(source) + ": field '" + key +
                         "' missing or not a string",
                     line_no);
  }
  return it->get<std::string>();
}

std::int64_t RequireInteger(const Json& record, const char* key,
                            std::string_view source, std::size_t line_no) {
  const auto it = record.find(key);
  if (it == record.end() || !it->is_number_integer()) {
    throw InputError(std::string(source) + ": field '" + key +
                         "' missing or not an integer",
                     line_no);
  }
  if (it->is_number_unsigned()) {
    const auto value = it->get<std::uint64_t>();
    if (value > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw InputError(std::string(source) + ": field '" + key +
                           "' out of range",
                       line_no);
    }
    return static_cast<std::int64_t>(value);
  }
  return it->get<std::int64_t>();
}

}  // namespace

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kValid:
      return "valid";
    case Split::kTest:
      return "test";
  }
  return "test";
}

std::optional<Split> ParseSplit(std::string_view name) {
  for (Split split : kAllSplits) {
    if (SplitName(split) == name) return split;
  }
  return std::nullopt;
}

void TrackingConfig::Validate() const {
  if (sample_size < 1) throw InputError("sample size must be at least 1");
  if (interval_steps < 1) throw InputError("interval must be at least 1 step");
}

Corpus::Corpus(std::vector<RepairExample> examples)
    : examples_(std::move(examples)) {
  index_.reserve(examples_.size());
  for (std::size_t i = 0; i < examples_.size(); ++i) {
    const std::string& id = examples_[i].id;
    if (id.empty()) throw InputError("example with empty id");
    if (!index_.emplace(id, i).second) {
      throw InputError("duplicate example id '" + id + "'");
    }
  }
}

const RepairExample* Corpus::Find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &examples_[it->second];
}

std::vector<RepairExample> Corpus::InSplit(Split split) const {
  std::vector<RepairExample> out;
  for (const RepairExample& ex : examples_) {
    if (ex.split == split) out.push_back(ex);
  }
  return out;
}

std::vector<RepairExample> ParseExamples(std::string_view content,
                                         std::string_view source) {
  std::vector<RepairExample> examples;
  std::unordered_map<std::string, std::size_t> first_seen;
  const std::vector<std::string> lines = SplitLines(content);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (Trim(lines[i]).empty()) continue;
    const Json record = ParseRecord(lines[i], source, line_no);
    RepairExample ex;
    ex.id = RequireString(record, "id", source, line_no);
    ex.buggy = RequireString(record, "buggy", source, line_no);
    ex.fixed = RequireString(record, "fixed", source, line_no);
    if (const auto it = record.find("split"); it != record.end()) {
      const auto split =
          it->is_string() ? ParseSplit(it->get<std::string>()) : std::nullopt;
      if (!split) {
        throw InputError(std::string(source) +
                             ": split must be one of train, valid, test",
                         line_no);
      }
      ex.split = *split;
    }
    if (ex.id.empty()) {
      throw InputError(std::string(source) + ": empty id", line_no);
    }
    if (Trim(ex.buggy).empty() || Trim(ex.fixed).empty()) {
      throw InputError(std::string(source) + ": example '" + ex.id +
                           "' has an empty buggy or fixed method",
                       line_no);
    }
    const auto [it, inserted] = first_seen.emplace(ex.id, line_no);
    if (!inserted) {
      throw InputError(std::string(source) + ": duplicate id '" + ex.id +
                           "' (first seen on line " +
                           std::to_string(it->second) + ")",
                       line_no);
    }
    examples.push_back(std::move(ex));
  }
  return examples;
}

std::vector<RepairExample> LoadExamples(const std::filesystem::path& path) {
  return ParseExamples(ReadFile(path), path.string());
}

std::string SerializeExamples(std::span<const RepairExample> examples) {
  std::string out;
  for (const RepairExample& ex : examples) {
    nlohmann::ordered_json record;
    record["id"] = ex.id;
    record["buggy"] = ex.buggy;
    record["fixed"] = ex.fixed;
    record["split"] = SplitName(ex.split);
    out += record.dump(-1, ' ', false, Json::error_handler_t::replace);
    out.push_back('\n');
  }
  return out;
}

std::vector<RepairExample> ImportCodeXGlue(const std::filesystem::path& dir) {
  std::vector<RepairExample> examples;
  bool any = false;
  for (Split split : kAllSplits) {
    const std::string stem = std::string(SplitName(split)) + ".buggy-fixed.";
    const std::filesystem::path buggy_path = dir / (stem + "buggy");
    const std::filesystem::path fixed_path = dir / (stem + "fixed");
    std::error_code ec;
    const bool has_buggy = std::filesystem::exists(buggy_path, ec);
    const bool has_fixed = std::filesystem::exists(fixed_path, ec);
    if (!has_buggy && !has_fixed) continue;
    if (has_buggy != has_fixed) {
      throw InputError("CodeXGLUE split '" + std::string(SplitName(split)) +
                       "' is missing its " + (has_buggy ? "fixed" : "buggy") +
                       " file in " + dir.string());
    }
    any = true;
    const std::vector<std::string> buggy = SplitLines(ReadFile(buggy_path));
    const std::vector<std::string> fixed = SplitLines(ReadFile(fixed_path));
    if (buggy.size() != fixed.size()) {
      throw InputError("CodeXGLUE split '" + std::string(SplitName(split)) +
                       "': " + std::to_string(buggy.size()) +
                       " buggy lines vs " + std::to_string(fixed.size()) +
                       " fixed lines");
    }
    for (std::size_t i = 0; i < buggy.size(); ++i) {
      if (Trim(buggy[i]).empty() || Trim(fixed[i]).empty()) {
        throw InputError(buggy_path.string() + ": empty method", i + 1);
      }
      examples.push_back({std::string(SplitName(split)) + "-" + std::to_string(i),
                          buggy[i], fixed[i], split});
    }
  }
  if (!any) {
    throw InputError("no CodeXGLUE *.buggy-fixed.{buggy,fixed} files in " +
                     dir.string());
  }
  return examples;
}

std::vector<Prediction> ParsePredictions(std::string_view content,
                                         std::string_view source,
                                         const Corpus& corpus) {
  std::vector<Prediction> predictions;
  std::set<std::tuple<std::string, std::int64_t, std::int64_t>> seen;
  const std::vector<std::string> lines = SplitLines(content);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (Trim(lines[i]).empty()) continue;
    const Json record = ParseRecord(lines[i], source, line_no);
    Prediction p;
    p.example_id = RequireString(record, "id", source, line_no);
    p.step = RequireInteger(record, "step", source, line_no);
    p.text = RequireString(record, "prediction", source, line_no);
    if (record.contains("rank")) {
      p.rank = RequireInteger(record, "rank", source, line_no);
    }
    if (p.step < 0) {
      throw InputError(std::string(source) + ": negative step " +
                           std::to_string(p.step),
                       line_no);
    }
    if (p.rank < 0) {
      throw InputError(std::string(source) + ": negative rank " +
                           std::to_string(p.rank),
                       line_no);
    }
    if (corpus.Find(p.example_id) == nullptr) {
      throw InputError(std::string(source) + ": prediction references unknown id '" +
                           p.example_id + "'",
                       line_no);
    }
    if (!seen.emplace(p.example_id, p.step, p.rank).second) {
      throw InputError(std::string(source) + ": duplicate prediction for id '" +
                           p.example_id + "' step " + std::to_string(p.step) +
                           " rank " + std::to_string(p.rank),
                       line_no);
    }
    predictions.push_back(std::move(p));
  }
  return predictions;
}

std::vector<Prediction> LoadPredictions(const std::filesystem::path& path,
                                        const Corpus& corpus) {
  return ParsePredictions(ReadFile(path), path.string(), corpus);
}

std::map<std::int64_t, std::vector<Prediction>> GroupByStep(
    std::span<const Prediction> predictions) {
  std::map<std::int64_t, std::vector<Prediction>> by_step;
  for (const Prediction& p : predictions) by_step[p.step].push_back(p);
  return by_step;
}

CorpusStats ComputeCorpusStats(std::span<const RepairExample> examples) {
  if (examples.empty()) throw InputError("corpus statistics need at least one example");
  CorpusStats stats;
  stats.n = examples.size();
  std::size_t identical = 0;
  std::size_t tokens = 0;
  for (const RepairExample& ex : examples) {
    ++stats.n_per_split[static_cast<std::size_t>(ex.split)];
    tokens += WhitespaceTokens(ex.buggy).size();
    if (ex.buggy == ex.fixed) ++identical;
  }
  const double n = static_cast<double>(stats.n);
  stats.mean_token_length = static_cast<double>(tokens) / n;
  stats.identity_pair_fraction = static_cast<double>(identical) / n;
  return stats;
}

std::vector<RepairExample> SampleValidation(
    std::span<const RepairExample> examples, const TrackingConfig& config,
    std::int64_t step) {
  config.Validate();
  if (examples.empty()) throw InputError("no validation examples to sample from");
  if (step < 0 || step % config.interval_steps != 0) {
    throw InputError("step " + std::to_string(step) +
                     " is not a multiple of the evaluation interval " +
                     std::to_string(config.interval_steps));
  }
  const std::uint64_t key_step =
      config.fixed_sample ? 0 : static_cast<std::uint64_t>(step);
  const std::vector<std::size_t> picks =
      SampleIndices(examples.size(), config.sample_size,
                    DeriveSampleKey(config.seed, SampleStream::kValidation, key_step));
  std::vector<RepairExample> sample;
  sample.reserve(picks.size());
  for (std::size_t i : picks) sample.push_back(examples[i]);
  return sample;
}

}  // namespace repairlens
