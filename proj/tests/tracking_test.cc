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
#include "repairlens/tracking.h"
#include "test_support.h"

namespace repairlens {
namespace {

constexpr std::string_view kValid = "int METHOD_1 ( ) { return VAR_1 ; }";
constexpr std::string_view kBroken = "int METHOD_1 ( ) { return VAR_1 ; ";

struct Checkpoint {
  std::vector<RepairExample> examples;
  std::vector<Prediction> predictions;
};

// n examples; the first `invalid` predictions are unparseable, the rest
// are valid and differ from both buggy and fixed.
Checkpoint Make(std::size_t n, std::size_t invalid, std::int64_t step = 500) {
  Checkpoint c;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string id = "x" + std::to_string(1000 + i);
    c.examples.push_back({id, "int METHOD_1 ( ) { return 0 ; }",
                          "int METHOD_1 ( ) { return 1 ; }", Split::kValid});
    c.predictions.push_back(
        {id, step, std::string(i < invalid ? kBroken : kValid), 0});
  }
  return c;
}

TEST_CASE("all-valid checkpoint with no exact matches") {
  auto parser = MakeParser();
  const auto c = Make(100, 0);
  const auto eval = EvaluateCheckpoint(c.examples, c.predictions, *parser);
  CHECK(eval.record.n == 100);
  CHECK(eval.record.syntax_validity_pct == 100.0);
  CHECK(eval.record.exact_match_pct == 0.0);
  CHECK(eval.record.modification_pct == 100.0);
  CHECK(eval.records.size() == 100);
  CHECK(std::is_sorted(eval.records.begin(), eval.records.end(),
                       [](const auto& a, const auto& b) { return a.example_id < b.example_id; }));
}

TEST_CASE("syntax validity percentages") {
  auto parser = MakeParser();
  CHECK(EvaluateCheckpoint(Make(100, 6).examples, Make(100, 6).predictions, *parser)
            .record.syntax_validity_pct == 94.0);
  const auto c = Make(100, 11);
  CHECK(EvaluateCheckpoint(c.examples, c.predictions, *parser).record.syntax_validity_pct ==
        89.0);
}

TEST_CASE("behavior percentages sum to 100") {
  auto parser = MakeParser();
  auto c = Make(7, 2);
  c.predictions[3].text = c.examples[3].buggy;
  c.predictions[4].text = c.examples[4].fixed;
  const auto r = EvaluateCheckpoint(c.examples, c.predictions, *parser).record;
  CHECK(std::abs(r.exact_match_pct + r.copy_pct + r.modification_pct - 100.0) < 1e-9);
  CHECK(r.exact_match_pct == doctest::Approx(100.0 / 7));
}

TEST_CASE("missing, duplicate and mixed-step predictions are rejected") {
  auto parser = MakeParser();
  auto c = Make(3, 0);
  auto missing = c.predictions;
  missing.erase(missing.begin() + 1);
  try {
    EvaluateCheckpoint(c.examples, missing, *parser);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("x1001") != std::string::npos);
  }
  auto dup = c.predictions;
  dup.push_back(dup[0]);
  CHECK_THROWS_AS(EvaluateCheckpoint(c.examples, dup, *parser), InputError);
  auto mixed = c.predictions;
  mixed[2].step = 1000;
  CHECK_THROWS_AS(EvaluateCheckpoint(c.examples, mixed, *parser), InputError);

  // Lower-ranked beams are ignored.
  auto beams = c.predictions;
  beams.push_back({"x1000", 500, "garbage (", 1});
  CHECK(EvaluateCheckpoint(c.examples, beams, *parser).record.syntax_validity_pct == 100.0);
}

TEST_CASE("parallel evaluation equals sequential") {
  auto parser = MakeParser();
  const auto c = Make(57, 13);
  const auto seq = EvaluateCheckpoint(c.examples, c.predictions, *parser);
  for (std::size_t jobs : {1u, 2u, 8u, 64u}) {
    EvalOptions options;
    options.jobs = jobs;
    const auto par = EvaluateCheckpoint(c.examples, c.predictions, MakeParserFactory(), options);
    CHECK(par.record == seq.record);
    CHECK(par.records == seq.records);
  }
}

CheckpointRecord At(std::int64_t step, double sv) {
  CheckpointRecord r;
  r.step = step;
  r.n = 100;
  r.syntax_validity_pct = sv;
  return r;
}

TEST_CASE("BuildSeries sorts and rejects duplicate steps") {
  const auto series = BuildSeries({At(1500, 1), At(500, 2), At(1000, 3)});
  REQUIRE(series.size() == 3);
  CHECK(series.records()[0].step == 500);
  CHECK(series.records()[2].step == 1500);
  CHECK_THROWS_AS(BuildSeries({At(500, 1), At(500, 2)}), InputError);
  CHECK(BuildSeries({}).empty());
}

TEST_CASE("SeriesStats over a step window") {
  const auto flat = BuildSeries({At(500, 92), At(1000, 92), At(1500, 92)});
  CHECK(SeriesStats(flat, 0).stddev == 0.0);

  const auto rising = BuildSeries({At(0, 50), At(500, 89), At(1000, 91), At(1500, 93), At(2000, 95)});
  const auto s = SeriesStats(rising, 500);
  CHECK(s.n == 4);
  CHECK(s.min == 89.0);
  CHECK(s.max == 95.0);
  CHECK(s.mean == 92.0);
  CHECK(s.median == 92.0);

  const auto single = SeriesStats(rising, 2000);
  CHECK(single.n == 1);
  CHECK(single.stddev == 0.0);
  CHECK_THROWS_AS(SeriesStats(rising, 2500), InputError);
}

TEST_CASE("loss log ingestion") {
  const auto losses = LoadLossLog(testing::Fixture("track/loss.jsonl"));
  REQUIRE(losses.count(1500) == 1);
  CHECK(losses.at(1500).eval_loss == 0.076);

  const auto partial = ParseLossLog("{\"step\":5,\"train_loss\":1.5}\n", "mem");
  CHECK(partial.at(5).train_loss == 1.5);
  CHECK_FALSE(partial.at(5).eval_loss.has_value());

  CHECK_THROWS_AS(ParseLossLog("{\"step\":-5,\"eval_loss\":1}\n", "mem"), InputError);
  CHECK_THROWS_AS(ParseLossLog("{\"step\":5,\"eval_loss\":\"x\"}\n", "mem"), InputError);
  CHECK_THROWS_AS(ParseLossLog("{\"step\":5}\n{\"step\":5}\n", "mem"), InputError);

  std::vector<CheckpointRecord> records = {At(500, 1), At(700, 1)};
  AttachLosses(records, losses);
  CHECK(records[0].eval_loss == 0.41);
  CHECK(records[0].train_loss == 0.5);
  CHECK_FALSE(records[1].eval_loss.has_value());
}

}  // namespace
}  // namespace repairlens
