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

#include <cmath>
#include <random>

#include "repairlens/corpus.h"
#include "repairlens/edit_distance.h"
#include "repairlens/errors.h"
#include "repairlens/metrics.h"
#include "test_support.h"

namespace repairlens {
namespace {

using testing::OracleLevenshtein;
using testing::RandomString;

TEST_CASE("Levenshtein on known pairs") {
  CHECK(Levenshtein("kitten", "sitting") == 3);
  CHECK(OracleLevenshtein("kitten", "sitting") == 3);
  CHECK(NormalizedEditDistance("kitten", "sitting") == doctest::Approx(3.0 / 7.0));
  CHECK(Levenshtein("", "abc") == 3);
  CHECK(NormalizedEditDistance("", "abc") == 1.0);
  CHECK(NormalizedEditDistance("", "") == 0.0);
  // Code points, not bytes.
  CHECK(Levenshtein("caf\xC3\xA9", "cafe") == 1);
  CHECK(TokenLevenshtein("int a = b ;", "int a = c ;") == 1);
  CHECK(TokenLevenshtein("a  b", " a b ") == 0);
}

TEST_CASE("Levenshtein matches the quadratic oracle on random pairs") {
  std::mt19937_64 gen(20260101);
  for (int i = 0; i < 1000; ++i) {
    const auto a = RandomString(gen, 30);
    const auto b = RandomString(gen, 30);
    CAPTURE(a);
    CAPTURE(b);
    REQUIRE(Levenshtein(a, b) == OracleLevenshtein(a, b));
  }
}

TEST_CASE("Levenshtein matches the oracle past the 64-symbol word") {
  std::mt19937_64 gen(99);
  for (int i = 0; i < 60; ++i) {
    const auto a = RandomString(gen, 200, "ab");
    const auto b = RandomString(gen, 200, "abc");
    REQUIRE(Levenshtein(a, b) == OracleLevenshtein(a, b));
  }
  const std::string x(64, 'a');
  const std::string y = x + "b";
  CHECK(Levenshtein(x, y) == 1);
  CHECK(Levenshtein(y, x) == 1);
}

TEST_CASE("Levenshtein is a metric") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 1000; ++i) {
    const auto a = RandomString(gen, 20, "abc");
    const auto b = RandomString(gen, 20, "abc");
    const auto c = RandomString(gen, 20, "abc");
    CHECK(Levenshtein(a, a) == 0);
    CHECK((Levenshtein(a, b) == 0) == (a == b));
    CHECK(Levenshtein(a, b) == Levenshtein(b, a));
    CHECK(Levenshtein(a, c) <= Levenshtein(a, b) + Levenshtein(b, c));
  }
}

TEST_CASE("NED bounds and exact-match consistency") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 1000; ++i) {
    const auto a = RandomString(gen, 12, "ab");
    const auto b = RandomString(gen, 12, "ab");
    const double ned = NormalizedEditDistance(a, b);
    CHECK(ned >= 0.0);
    CHECK(ned <= 1.0);
    if (!a.empty() || !b.empty()) CHECK((ned == 0.0) == ExactMatch(a, b));
    if (a.empty() != b.empty()) CHECK(ned == 1.0);
  }
}

TEST_CASE("exact match modes") {
  CHECK(ExactMatch("a ;", "a ;"));
  CHECK_FALSE(ExactMatch("a  ;", "a ;"));
  CHECK(ExactMatch(" a\n ;", "a ;", EmNormalization::kWhitespace));
  MetricOptions ws;
  ws.em = EmNormalization::kWhitespace;
  CHECK(NormalizedEditDistance("a   b", "a b", ws) == 0.0);
  MetricOptions tokens;
  tokens.ned_unit = NedUnit::kToken;
  CHECK(NormalizedEditDistance("int a = b ;", "int a = c ;", tokens) ==
        doctest::Approx(1.0 / 5.0));
}

TEST_CASE("behavior precedence: exact match, then copy, then modification") {
  CHECK(ClassifyBehavior("x", "y", "y") == BehaviorClass::kExactMatch);
  CHECK(ClassifyBehavior("x", "x", "x") == BehaviorClass::kExactMatch);
  CHECK(ClassifyBehavior("x", "x", "y") == BehaviorClass::kCopy);
  CHECK(ClassifyBehavior("x", "z", "y") == BehaviorClass::kModification);
  CHECK(ClassifyBehavior("a ;", "a  ;", "b ;") == BehaviorClass::kModification);
  CHECK(IsNearCopy("a ;", "a  ;"));
  CHECK_FALSE(IsNearCopy("a ;", "a ;"));
  CHECK_FALSE(IsNearCopy("a ;", "b ;"));
  for (auto b : kAllBehaviors) CHECK(ParseBehavior(BehaviorName(b)) == b);
  CHECK_FALSE(ParseBehavior("copy").has_value());
}

TEST_CASE("engineered ten-case fixture: 8 copies and 2 modifications") {
  const Corpus corpus(LoadExamples(testing::Fixture("behavior10/corpus.jsonl")));
  const auto preds =
      LoadPredictions(testing::Fixture("behavior10/predictions.jsonl"), corpus);
  auto parser = MakeParser();
  std::vector<EvalRecord> records;
  std::array<int, 3> counts{};
  for (const auto& p : preds) {
    records.push_back(EvaluatePrediction(*corpus.Find(p.example_id), p, *parser));
    ++counts[static_cast<int>(records.back().behavior)];
    CHECK(records.back().syntax_valid);
  }
  CHECK(counts == std::array<int, 3>{0, 8, 2});
  CHECK(ModificationRate(records) == 20.0);
}

TEST_CASE("EvaluatePrediction fills every field") {
  auto parser = MakeParser();
  const RepairExample ex{"e", "return a ;", "return b ;", Split::kTest};
  const auto rec = EvaluatePrediction(ex, {"e", 500, "", 0}, *parser);
  CHECK(rec.empty_prediction);
  CHECK_FALSE(rec.syntax_valid);
  CHECK(rec.ned == 1.0);
  CHECK(rec.pred_len == 0);
  CHECK(rec.step == 500);
  const auto exact = EvaluatePrediction(ex, {"e", 500, "return b ;", 0}, *parser);
  CHECK(exact.behavior == BehaviorClass::kExactMatch);
  CHECK(exact.ned == 0.0);
  CHECK(exact.pred_len == 10);
  const auto near = EvaluatePrediction(ex, {"e", 500, "return  a ;", 0}, *parser);
  CHECK(near.near_copy);
  CHECK(near.behavior == BehaviorClass::kModification);
}

TEST_CASE("ModificationRate") {
  std::vector<EvalRecord> records(4);
  records[0].behavior = BehaviorClass::kCopy;
  records[1].behavior = BehaviorClass::kCopy;
  records[2].behavior = BehaviorClass::kExactMatch;
  records[3].behavior = BehaviorClass::kModification;
  CHECK(ModificationRate(records) == 50.0);
  CHECK_THROWS_AS(ModificationRate({}), InputError);
}

TEST_CASE("Aggregate uses population statistics") {
  const std::vector<double> v = {0.6, 0.2, 0.4};
  const auto s = Aggregate(v);
  CHECK(s.mean == doctest::Approx(0.4));
  CHECK(s.median == 0.4);
  CHECK(std::abs(s.stddev - std::sqrt(2.0 / 75.0)) < 1e-9);
  CHECK(s.min == 0.2);
  CHECK(s.max == 0.6);
  CHECK(s.n == 3);

  const std::vector<double> even = {4.0, 1.0, 3.0, 2.0};
  CHECK(Aggregate(even).median == 2.5);
  const std::vector<double> one = {0.7};
  CHECK(Aggregate(one).stddev == 0.0);
  CHECK_THROWS_AS(Aggregate({}), InputError);
}

}  // namespace
}  // namespace repairlens
