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

#include <doctest.h>

#include <nlohmann/json.hpp>

#include "repairlens/errors.h"
#include "repairlens/io.h"
#include "repairlens/report.h"
#include "test_support.h"

namespace repairlens {
namespace {

using testing::Fixture;
using testing::Slurp;
using testing::TempDir;

struct Loaded {
  Corpus corpus;
  std::vector<Prediction> predictions;
  CheckpointEvaluation evaluation;
};

Loaded LoadBehavior10() {
  Loaded l;
  l.corpus = Corpus(LoadExamples(Fixture("behavior10/corpus.jsonl")));
  l.predictions = LoadPredictions(Fixture("behavior10/predictions.jsonl"), l.corpus);
  auto parser = MakeParser();
  const auto examples = l.corpus.examples();
  l.evaluation = EvaluateCheckpoint(examples, l.predictions, *parser);
  return l;
}

EvalReport Report(const Loaded& l) {
  Provenance p;
  p.command = "eval";
  p.parser_binding = "tree-sitter-java";
  p.inputs.push_back(DigestFile("corpus", Fixture("behavior10/corpus.jsonl")));
  return BuildReport(ComputeCorpusStats(l.corpus.examples()), {l.evaluation}, p);
}

TEST_CASE("behavior distribution of the ten-case fixture") {
  const auto l = LoadBehavior10();
  const auto dist = ComputeBehaviorDistribution(l.evaluation.records);
  CHECK(dist[0] == BehaviorShare{0, 0.0});
  CHECK(dist[1] == BehaviorShare{8, 80.0});
  CHECK(dist[2] == BehaviorShare{2, 20.0});
  CHECK_THROWS_AS(ComputeBehaviorDistribution({}), InputError);
}

TEST_CASE("golden CSV output") {
  const auto l = LoadBehavior10();
  const auto report = Report(l);
  CHECK(BehaviorCsv(report) ==
        "class,count,percentage\n"
        "ExactMatch,0,0.000000\n"
        "Copy,8,80.000000\n"
        "Modification,2,20.000000\n");
  const auto lines = SplitLines(CheckpointsCsv(report.series));
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == kCheckpointsCsvHeader);
  CHECK(lines[1].rfind("32730,10,100.000000,0.000000,80.000000,20.000000,", 0) == 0);
  CHECK(lines[1].back() == ',');  // no loss ingested

  const auto table = SplitLines(Table1Csv(report.table1));
  REQUIRE(table.size() == 3);
  CHECK(table[1] == "Exact Match,0.000000,0.000000,0.000000");
  CHECK(table[2].rfind("Normalized Edit Distance,", 0) == 0);
}

TEST_CASE("empty series yields header-only tables") {
  EvalReport report;
  CHECK(CheckpointsCsv(report.series) == std::string(kCheckpointsCsvHeader) + "\n");
  CHECK(BehaviorCsv(report) == std::string(kBehaviorCsvHeader) + "\n");
  CHECK(Table1Csv({}) == std::string(kTable1CsvHeader) + "\n");
  CHECK(ReportToJson(report)["final"].is_null());
}

TEST_CASE("emitting twice gives byte-identical files") {
  const auto l = LoadBehavior10();
  const auto report = Report(l);
  TempDir a;
  TempDir b;
  EmitReport(report, a.path());
  EmitReport(Report(LoadBehavior10()), b.path());
  for (const char* name : {"report.json", "checkpoints.csv", "behavior.csv", "table1.csv"}) {
    CAPTURE(name);
    CHECK(Sha256Hex(Slurp(a / name)) == Sha256Hex(Slurp(b / name)));
  }
  CHECK_FALSE(std::filesystem::exists(a / "report.json.tmp"));
}

TEST_CASE("report.json summaries are recomputable from its records") {
  const auto l = LoadBehavior10();
  TempDir dir;
  EmitReport(Report(l), dir.path());
  const auto j = nlohmann::json::parse(Slurp(dir / "report.json"));
  const auto& last = j.at("series").back();
  std::map<std::string, int> counts;
  double ned_sum = 0.0;
  int valid = 0;
  for (const auto& r : last.at("records")) {
    ++counts[r.at("behavior").get<std::string>()];
    ned_sum += r.at("ned").get<double>();
    valid += r.at("syntax_valid").get<bool>() ? 1 : 0;
  }
  const double n = static_cast<double>(last.at("records").size());
  CHECK(j.at("behavior_counts").at("Copy").at("count") == counts["Copy"]);
  CHECK(j.at("behavior_counts").at("Modification").at("count") == counts["Modification"]);
  CHECK(j.at("final").at("syntax_validity_pct").get<double>() == 100.0 * valid / n);
  CHECK(j.at("final").at("ned_stats").at("mean").get<double>() ==
        doctest::Approx(ned_sum / n).epsilon(1e-6));
  CHECK(j.at("std_definition") == "population");
  CHECK(j.at("provenance").at("inputs")[0].at("file") == "corpus.jsonl");
}

TEST_CASE("ExtractCases is seeded and bounded") {
  const auto l = LoadBehavior10();
  auto parser = MakeParser();
  const auto a = ExtractCases(l.corpus, l.predictions, l.evaluation.records, 4, 42, *parser);
  const auto b = ExtractCases(l.corpus, l.predictions, l.evaluation.records, 4, 42, *parser);
  CHECK(CasesToJson(a) == CasesToJson(b));
  REQUIRE(a.cases.size() == 4);
  CHECK(a.step == 32730);
  CHECK(std::is_sorted(a.cases.begin(), a.cases.end(),
                       [](const Case& x, const Case& y) { return x.example_id < y.example_id; }));
  for (const auto& c : a.cases) {
    CHECK(c.verdict.valid);
    CHECK(c.diff_vs_buggy.empty() == (c.behavior == BehaviorClass::kCopy));
    CHECK_FALSE(c.diff_vs_fixed.empty());
  }
  const auto all = ExtractCases(l.corpus, l.predictions, l.evaluation.records, 10, 1, *parser);
  CHECK(all.cases.size() == 10);
  CHECK_THROWS_AS(ExtractCases(l.corpus, l.predictions, l.evaluation.records, 11, 1, *parser),
                  InputError);
}

TEST_CASE("case bundles list lower-ranked beams in rank order") {
  const auto l = LoadBehavior10();
  auto predictions = l.predictions;
  for (const auto& c : {std::pair{3, "third"}, std::pair{1, "first"}, std::pair{2, "second"}}) {
    for (const auto& ex : l.corpus.examples()) {
      predictions.push_back({ex.id, 32730, c.second, c.first});
    }
  }
  auto parser = MakeParser();
  const auto bundle = ExtractCases(l.corpus, predictions, l.evaluation.records, 2, 5, *parser);
  for (const auto& c : bundle.cases) {
    CHECK(c.candidates == std::vector<std::string>{"first", "second", "third"});
  }
}

TEST_CASE("unwritable output directory is an environment error") {
  TempDir dir;
  testing::Spit(dir / "blocker", "x");
  CHECK_THROWS_AS(EmitReport(EvalReport{}, dir / "blocker" / "sub"), EnvironmentError);
}

}  // namespace
}  // namespace repairlens
