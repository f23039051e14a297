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

#include "repairlens/report.h"

#include <algorithm>
#include <unordered_map>

#include "repairlens/diff.h"
#include "repairlens/errors.h"
#include "repairlens/io.h"
#include "repairlens/sampling.h"
#include "repairlens/text.h"

namespace repairlens {

namespace {

using OJson = nlohmann::ordered_json;

OJson Real(double value) { return RoundFixed6(value); }

OJson OptionalReal(const std::optional<double>& value) {
  return value ? Real(*value) : OJson(nullptr);
}

OJson StatsToJson(const SummaryStats& s) {
  OJson j;
  j["mean"] = Real(s.mean);
  j["median"] = Real(s.median);
  j["std"] = Real(s.stddev);
  j["min"] = Real(s.min);
  j["max"] = Real(s.max);
  j["n"] = s.n;
  return j;
}

OJson CheckpointToJson(const CheckpointRecord& r) {
  OJson j;
  j["step"] = r.step;
  j["n"] = r.n;
  j["syntax_validity_pct"] = Real(r.syntax_validity_pct);
  j["exact_match_pct"] = Real(r.exact_match_pct);
  j["copy_pct"] = Real(r.copy_pct);
  j["modification_pct"] = Real(r.modification_pct);
  j["ned_stats"] = StatsToJson(r.ned_stats);
  j["eval_loss"] = OptionalReal(r.eval_loss);
  j["train_loss"] = OptionalReal(r.train_loss);
  return j;
}

OJson EvalRecordToJson(const EvalRecord& r) {
  OJson j;
  j["example_id"] = r.example_id;
  j["step"] = r.step;
  j["behavior"] = BehaviorName(r.behavior);
  j["syntax_valid"] = r.syntax_valid;
  j["syntax_error_count"] = r.syntax_error_count;
  j["ned"] = Real(r.ned);
  j["pred_len"] = r.pred_len;
  j["empty_prediction"] = r.empty_prediction;
  j["near_copy"] = r.near_copy;
  return j;
}

OJson VerdictToJson(const SyntaxVerdict& v) {
  OJson j;
  j["valid"] = v.valid;
  j["error_count"] = v.error_count;
  OJson spans = OJson::array();
  for (const ByteSpan& s : v.error_spans) spans.push_back(OJson::array({s.begin, s.end}));
  j["error_spans"] = std::move(spans);
  j["wrapped"] = v.wrapped;
  j["empty_input"] = v.empty_input;
  return j;
}

std::string Dump(const OJson& j) {
  return j.dump(2, ' ', false, OJson::error_handler_t::replace) + "\n";
}

}  // namespace

BehaviorDistribution ComputeBehaviorDistribution(std::span<const EvalRecord> records) {
  if (records.empty()) throw InputError("behavior distribution of an empty set is undefined");
  BehaviorDistribution dist{};
  for (const EvalRecord& r : records) ++dist[static_cast<std::size_t>(r.behavior)].count;
  const double n = static_cast<double>(records.size());
  for (BehaviorShare& share : dist) {
    share.percentage = 100.0 * static_cast<double>(share.count) / n;
  }
  return dist;
}

std::vector<Table1Row> BuildTable1(std::span<const EvalRecord> records) {
  std::vector<double> em;
  std::vector<double> ned;
  for (const EvalRecord& r : records) {
    em.push_back(r.behavior == BehaviorClass::kExactMatch ? 1.0 : 0.0);
    ned.push_back(r.ned);
  }
  return {{"Exact Match", Aggregate(em)}, {"Normalized Edit Distance", Aggregate(ned)}};
}

InputDigest DigestFile(std::string role, const std::filesystem::path& path) {
  return {std::move(role), path.filename().string(), Sha256Hex(ReadFile(path))};
}

EvalReport BuildReport(const CorpusStats& corpus_stats,
                       std::vector<CheckpointEvaluation> checkpoints,
                       Provenance provenance, std::optional<double> steps_per_epoch) {
  EvalReport report;
  report.corpus_stats = corpus_stats;
  report.provenance = std::move(provenance);
  report.steps_per_epoch = steps_per_epoch;

  std::vector<CheckpointRecord> summaries;
  summaries.reserve(checkpoints.size());
  for (CheckpointEvaluation& c : checkpoints) summaries.push_back(c.record);
  report.series = BuildSeries(std::move(summaries));
  for (CheckpointEvaluation& c : checkpoints) {
    report.records.emplace(c.record.step, std::move(c.records));
  }
  if (report.series.empty()) return report;

  report.final = report.series.records().back();
  const std::vector<EvalRecord>& last = report.records.at(report.final->step);
  report.behavior_counts = ComputeBehaviorDistribution(last);
  report.table1 = BuildTable1(last);
  report.modification_rate = ModificationRate(last);
  for (const EvalRecord& r : last) {
    if (r.near_copy) ++report.near_copy_count;
    if (r.empty_prediction) ++report.empty_prediction_count;
  }
  return report;
}

OJson ReportToJson(const EvalReport& report) {
  OJson j;
  const CorpusStats& cs = report.corpus_stats;
  OJson per_split;
  for (Split split : kAllSplits) {
    per_split[std::string(SplitName(split))] = cs.n_per_split[static_cast<std::size_t>(split)];
  }
  j["corpus_stats"] = {{"n", cs.n},
                       {"n_per_split", per_split},
                       {"mean_token_length", Real(cs.mean_token_length)},
                       {"identity_pair_fraction", Real(cs.identity_pair_fraction)}};

  OJson series = OJson::array();
  for (const CheckpointRecord& r : report.series.records()) {
    OJson entry = CheckpointToJson(r);
    OJson records = OJson::array();
    if (const auto it = report.records.find(r.step); it != report.records.end()) {
      for (const EvalRecord& e : it->second) records.push_back(EvalRecordToJson(e));
    }
    entry["records"] = std::move(records);
    series.push_back(std::move(entry));
  }
  j["series"] = std::move(series);
  j["final"] = report.final ? CheckpointToJson(*report.final) : OJson(nullptr);

  OJson behavior;
  for (BehaviorClass b : kAllBehaviors) {
    const BehaviorShare& share = report.behavior_counts[static_cast<std::size_t>(b)];
    behavior[std::string(BehaviorName(b))] = {{"count", share.count},
                                              {"percentage", Real(share.percentage)}};
  }
  j["behavior_counts"] = std::move(behavior);
  j["modification_rate"] = Real(report.modification_rate);
  j["near_copy_count"] = report.near_copy_count;
  j["empty_prediction_count"] = report.empty_prediction_count;

  OJson table = OJson::array();
  for (const Table1Row& row : report.table1) {
    OJson entry{{"metric", row.metric}};
    entry.update(StatsToJson(row.stats));
    table.push_back(std::move(entry));
  }
  j["table1"] = std::move(table);
  j["std_definition"] = "population";
  j["steps_per_epoch"] = OptionalReal(report.steps_per_epoch);

  const Provenance& p = report.provenance;
  OJson inputs = OJson::array();
  for (const InputDigest& d : p.inputs) {
    inputs.push_back({{"role", d.role}, {"file", d.file_name}, {"sha256", d.sha256}});
  }
  j["provenance"] = {{"tool_version", p.tool_version},
                     {"command", p.command},
                     {"seed", p.seed},
                     {"parser_binding", p.parser_binding},
                     {"sample_size", p.sample_size},
                     {"interval_steps", p.interval_steps},
                     {"fixed_sample", p.fixed_sample},
                     {"em_normalization", p.em_normalization},
                     {"ned_unit", p.ned_unit},
                     {"inputs", std::move(inputs)}};
  return j;
}

std::string CheckpointsCsv(const CheckpointSeries& series) {
  std::string out(kCheckpointsCsvHeader);
  out += "\n";
  for (const CheckpointRecord& r : series.records()) {
    out += std::to_string(r.step) + "," + std::to_string(r.n) + "," +
           FormatFixed6(r.syntax_validity_pct) + "," + FormatFixed6(r.exact_match_pct) + "," +
           FormatFixed6(r.copy_pct) + "," + FormatFixed6(r.modification_pct) + "," +
           FormatFixed6(r.ned_stats.mean) + "," + FormatFixed6(r.ned_stats.median) + "," +
           FormatFixed6(r.ned_stats.stddev) + "," +
           (r.eval_loss ? FormatFixed6(*r.eval_loss) : std::string()) + "\n";
  }
  return out;
}

std::string BehaviorCsv(const EvalReport& report) {
  std::string out(kBehaviorCsvHeader);
  out += "\n";
  if (!report.final) return out;
  for (BehaviorClass b : kAllBehaviors) {
    const BehaviorShare& share = report.behavior_counts[static_cast<std::size_t>(b)];
    out += std::string(BehaviorName(b)) + "," + std::to_string(share.count) + "," +
           FormatFixed6(share.percentage) + "\n";
  }
  return out;
}

std::string Table1Csv(std::span<const Table1Row> rows) {
  std::string out(kTable1CsvHeader);
  out += "\n";
  for (const Table1Row& row : rows) {
    out += row.metric + "," + FormatFixed6(row.stats.mean) + "," +
           FormatFixed6(row.stats.median) + "," + FormatFixed6(row.stats.stddev) + "\n";
  }
  return out;
}

void EmitReport(const EvalReport& report, const std::filesystem::path& out_dir) {
  EnsureDirectory(out_dir);
  WriteFileAtomic(out_dir / "report.json", Dump(ReportToJson(report)));
  WriteFileAtomic(out_dir / "checkpoints.csv", CheckpointsCsv(report.series));
  WriteFileAtomic(out_dir / "behavior.csv", BehaviorCsv(report));
  WriteFileAtomic(out_dir / "table1.csv", Table1Csv(report.table1));
}

std::string CaseDiffVsBuggy(const Case& c) {
  return UnifiedDiff(c.buggy, c.prediction, "buggy", "prediction");
}

std::string CaseDiffVsFixed(const Case& c) {
  return UnifiedDiff(c.prediction, c.fixed, "prediction", "fixed");
}

CaseBundle ExtractCases(const Corpus& corpus, std::span<const Prediction> predictions,
                        std::span<const EvalRecord> records, std::size_t k,
                        std::uint64_t seed, JavaParser& parser) {
  if (k > records.size()) {
    throw InputError("cannot extract " + std::to_string(k) + " cases from " +
                     std::to_string(records.size()) + " evaluated examples");
  }
  std::vector<const EvalRecord*> ordered;
  for (const EvalRecord& r : records) ordered.push_back(&r);
  std::sort(ordered.begin(), ordered.end(), [](const EvalRecord* a, const EvalRecord* b) {
    return a->example_id < b->example_id;
  });
  std::unordered_map<std::string_view, const Prediction*> top;
  std::unordered_map<std::string_view, std::vector<const Prediction*>> beams;
  for (const Prediction& p : predictions) {
    if (p.rank == 0) {
      top.emplace(p.example_id, &p);
    } else {
      beams[p.example_id].push_back(&p);
    }
  }

  CaseBundle bundle;
  bundle.step = ordered.empty() ? 0 : ordered.front()->step;
  bundle.seed = seed;
  const std::vector<std::size_t> picks = SampleIndices(
      ordered.size(), k,
      DeriveSampleKey(seed, SampleStream::kCases, static_cast<std::uint64_t>(bundle.step)));
  for (std::size_t i : picks) {
    const EvalRecord& r = *ordered[i];
    const RepairExample* ex = corpus.Find(r.example_id);
    const auto pred = top.find(r.example_id);
    if (ex == nullptr || pred == top.end()) {
      throw InputError("no example or prediction behind record '" + r.example_id + "'");
    }
    Case c;
    c.example_id = r.example_id;
    c.buggy = ex->buggy;
    c.fixed = ex->fixed;
    c.prediction = pred->second->text;
    c.behavior = r.behavior;
    c.verdict = CheckSyntax(c.prediction, parser);
    c.diff_vs_buggy = CaseDiffVsBuggy(c);
    c.diff_vs_fixed = CaseDiffVsFixed(c);
    if (const auto it = beams.find(r.example_id); it != beams.end()) {
      std::vector<const Prediction*> ranked = it->second;
      std::sort(ranked.begin(), ranked.end(), [](const Prediction* a, const Prediction* b) {
        return a->rank < b->rank;
      });
      for (const Prediction* p : ranked) c.candidates.push_back(p->text);
    }
    bundle.cases.push_back(std::move(c));
  }
  return bundle;
}

OJson CasesToJson(const CaseBundle& bundle) {
  OJson cases = OJson::array();
  for (const Case& c : bundle.cases) {
    OJson entry;
    entry["example_id"] = c.example_id;
    entry["buggy"] = c.buggy;
    entry["fixed"] = c.fixed;
    entry["prediction"] = c.prediction;
    entry["behavior"] = BehaviorName(c.behavior);
    entry["syntax"] = VerdictToJson(c.verdict);
    entry["diff_vs_buggy"] = c.diff_vs_buggy;
    entry["diff_vs_fixed"] = c.diff_vs_fixed;
    entry["candidates"] = c.candidates;
    cases.push_back(std::move(entry));
  }
  return {{"step", bundle.step}, {"seed", bundle.seed}, {"cases", std::move(cases)}};
}

void EmitCases(const CaseBundle& bundle, const std::filesystem::path& out_dir) {
  EnsureDirectory(out_dir);
  WriteFileAtomic(out_dir / "cases.json", Dump(CasesToJson(bundle)));
}

}  // namespace repairlens
