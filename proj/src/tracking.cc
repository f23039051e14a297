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

#include "repairlens/tracking.h"

#include <algorithm>
#include <exception>
#include <json.hpp>
#include <string>
#include <thread>
#include <unordered_map>

#include "repairlens/errors.h"
#include "repairlens/io.h"
#include "repairlens/text.h"

namespace repairlens {

namespace {

struct WorkItem {
  const RepairExample* example;
  const Prediction* prediction;
};

// Pairs each example with its rank-0 prediction.
std::vector<WorkItem> PairExamples(std::span<const RepairExample> examples,
                                   std::span<const Prediction> predictions) {
  if (examples.empty()) throw InputError("no examples to evaluate");
  std::unordered_map<std::string_view, const Prediction*> top;
  std::optional<std::int64_t> step;
  for (const Prediction& p : predictions) {
    if (step && *step != p.step) {
      throw InputError("checkpoint predictions mix steps " + std::to_string(*step) +
                       " and " + std::to_string(p.step));
    }
    step = p.step;
    if (p.rank != 0) continue;
    if (!top.emplace(p.example_id, &p).second) {
      throw InputError("more than one rank-0 prediction for example '" +
                       p.example_id + "'");
    }
  }
  std::vector<WorkItem> items;
  items.reserve(examples.size());
  for (const RepairExample& ex : examples) {
    const auto it = top.find(ex.id);
    if (it == top.end()) {
      throw InputError("no rank-0 prediction for sampled example '" + ex.id + "'");
    }
    items.push_back({&ex, it->second});
  }
  return items;
}

CheckpointEvaluation Finish(std::vector<EvalRecord> records) {
  std::sort(records.begin(), records.end(), [](const EvalRecord& a, const EvalRecord& b) {
    return a.example_id < b.example_id;
  });
  CheckpointEvaluation out;
  out.record = SummarizeCheckpoint(records.front().step, records);
  out.records = std::move(records);
  return out;
}

}  // namespace

CheckpointEvaluation EvaluateCheckpoint(std::span<const RepairExample> examples,
                                        std::span<const Prediction> predictions,
                                        JavaParser& parser,
                                        const MetricOptions& options) {
  const std::vector<WorkItem> items = PairExamples(examples, predictions);
  std::vector<EvalRecord> records;
  records.reserve(items.size());
  for (const WorkItem& item : items) {
    records.push_back(EvaluatePrediction(*item.example, *item.prediction, parser, options));
  }
  return Finish(std::move(records));
}

CheckpointEvaluation EvaluateCheckpoint(std::span<const RepairExample> examples,
                                        std::span<const Prediction> predictions,
                                        const ParserFactory& make_parser,
                                        const EvalOptions& options) {
  const std::vector<WorkItem> items = PairExamples(examples, predictions);
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, items.size());
  std::vector<EvalRecord> records(items.size());
  std::vector<std::exception_ptr> failures(jobs);
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          const std::unique_ptr<JavaParser> parser = make_parser();
          for (std::size_t i = w; i < items.size(); i += jobs) {
            records[i] = EvaluatePrediction(*items[i].example, *items[i].prediction,
                                            *parser, options.metrics);
          }
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return Finish(std::move(records));
}

CheckpointRecord SummarizeCheckpoint(std::int64_t step,
                                     std::span<const EvalRecord> records) {
  if (records.empty()) throw InputError("checkpoint " + std::to_string(step) + " has no records");
  std::vector<const EvalRecord*> ordered;
  ordered.reserve(records.size());
  for (const EvalRecord& r : records) ordered.push_back(&r);
  std::stable_sort(ordered.begin(), ordered.end(), [](const EvalRecord* a, const EvalRecord* b) {
    return a->example_id < b->example_id;
  });

  std::size_t valid = 0;
  std::array<std::size_t, 3> behavior{};
  std::vector<double> neds;
  neds.reserve(ordered.size());
  for (const EvalRecord* r : ordered) {
    if (r->syntax_valid) ++valid;
    ++behavior[static_cast<std::size_t>(r->behavior)];
    neds.push_back(r->ned);
  }
  const double n = static_cast<double>(ordered.size());
  const auto pct = [n](std::size_t count) { return 100.0 * static_cast<double>(count) / n; };

  CheckpointRecord record;
  record.step = step;
  record.n = ordered.size();
  record.syntax_validity_pct = pct(valid);
  record.exact_match_pct = pct(behavior[static_cast<std::size_t>(BehaviorClass::kExactMatch)]);
  record.copy_pct = pct(behavior[static_cast<std::size_t>(BehaviorClass::kCopy)]);
  record.modification_pct = pct(behavior[static_cast<std::size_t>(BehaviorClass::kModification)]);
  record.ned_stats = Aggregate(neds);
  return record;
}

CheckpointSeries BuildSeries(std::vector<CheckpointRecord> records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckpointRecord& a, const CheckpointRecord& b) {
                     return a.step < b.step;
                   });
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].step == records[i - 1].step) {
      throw InputError("duplicate checkpoint step " + std::to_string(records[i].step));
    }
  }
  CheckpointSeries series;
  series.records_ = std::move(records);
  return series;
}

SummaryStats SeriesStats(const CheckpointSeries& series, std::int64_t from_step) {
  std::vector<double> values;
  for (const CheckpointRecord& r : series.records()) {
    if (r.step >= from_step) values.push_back(r.syntax_validity_pct);
  }
  if (values.empty()) {
    throw InputError("no checkpoints at or after step " + std::to_string(from_step));
  }
  return Aggregate(values);
}

std::map<std::int64_t, LossEntry> ParseLossLog(std::string_view content,
                                               std::string_view source) {
  using Json = nlohmann::json;
  std::map<std::int64_t, LossEntry> losses;
  const std::vector<std::string> lines = SplitLines(content);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (Trim(lines[i]).empty()) continue;
    Json record;
    try {
      record = Json::parse(lines[i]);
    } catch (const Json::parse_error& e) {
      throw InputError(std::string(source) + ": malformed loss record: " + e.what(), line_no);
    }
    if (!record.is_object() || !record.contains("step") ||
        !record["step"].is_number_integer() || record["step"].get<std::int64_t>() < 0) {
      throw InputError(std::string(source) + ": loss record needs a non-negative integer step",
                       line_no);
    }
    const std::int64_t step = record["step"].get<std::int64_t>();
    LossEntry entry;
    for (const char* key : {"train_loss", "eval_loss"}) {
      if (!record.contains(key) || record[key].is_null()) continue;
      if (!record[key].is_number()) {
        throw InputError(std::string(source) + ": '" + key + "' is not a number", line_no);
      }
      (std::string_view(key) == "train_loss" ? entry.train_loss : entry.eval_loss) =
          record[key].get<double>();
    }
    if (!losses.emplace(step, entry).second) {
      throw InputError(std::string(source) + ": duplicate loss entry for step " +
                           std::to_string(step),
                       line_no);
    }
  }
  return losses;
}

std::map<std::int64_t, LossEntry> LoadLossLog(const std::filesystem::path& path) {
  return ParseLossLog(ReadFile(path), path.string());
}

void AttachLosses(std::vector<CheckpointRecord>& records,
                  const std::map<std::int64_t, LossEntry>& losses) {
  for (CheckpointRecord& r : records) {
    const auto it = losses.find(r.step);
    if (it == losses.end()) continue;
    r.train_loss = it->second.train_loss;
    r.eval_loss = it->second.eval_loss;
  }
}

}  // namespace repairlens
