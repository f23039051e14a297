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

#include <sstream>

#include <nlohmann/json.hpp>

#include "repairlens/cli.h"
#include "repairlens/errors.h"
#include "repairlens/io.h"
#include "test_support.h"

namespace repairlens::cli {
namespace {

using repairlens::testing::Fixture;
using repairlens::testing::Slurp;
using repairlens::testing::TempDir;

RunConfig Parse(std::vector<std::string> args) { return ParseArgs(args); }

int RunMain(std::vector<std::string> args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Main(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

TEST_CASE("eval defaults") {
  const auto c = Parse({"eval", "--corpus", "c.jsonl", "--preds", "p.jsonl", "--out", "o"});
  CHECK(c.command == Command::kEval);
  CHECK(c.corpus == "c.jsonl");
  CHECK(c.seed == 42);
  CHECK(c.em == EmNormalization::kStrict);
  CHECK(c.ned_unit == NedUnit::kCharacter);
  CHECK_FALSE(c.step.has_value());
  CHECK_FALSE(c.split.has_value());
  CHECK(c.grammar == "tree-sitter-java");
  CHECK(c.jobs >= 1);
}

TEST_CASE("track protocol flags") {
  const auto c = Parse({"track", "--corpus", "c", "--preds", "p", "--out", "o", "--interval",
                        "250", "--sample", "40", "--fixed-sample", "--seed", "9",
                        "--em-normalization", "whitespace", "--ned-unit", "token",
                        "--loss-log", "l.jsonl", "--steps-per-epoch", "2182"});
  CHECK(c.command == Command::kTrack);
  CHECK(c.interval_steps == 250);
  CHECK(c.sample_size == 40);
  CHECK(c.fixed_sample);
  CHECK(c.seed == 9);
  CHECK(c.em == EmNormalization::kWhitespace);
  CHECK(c.ned_unit == NedUnit::kToken);
  CHECK(c.loss_log == "l.jsonl");
  CHECK(c.steps_per_epoch == 2182.0);
  CHECK(c.split == Split::kValid);
}

TEST_CASE("malformed command lines are usage errors") {
  CHECK_THROWS_AS(Parse({"eval", "--bogus"}), UsageError);
  CHECK_THROWS_AS(Parse({"frobnicate"}), UsageError);
  CHECK_THROWS_AS(Parse({}), UsageError);
  CHECK_THROWS_AS(Parse({"eval", "--preds", "p", "--out", "o"}), UsageError);
  CHECK_THROWS_AS(
      Parse({"eval", "--corpus", "c", "--codexglue-dir", "d", "--preds", "p", "--out", "o"}),
      UsageError);
  CHECK_THROWS_AS(Parse({"eval", "--corpus", "c", "--preds", "p", "--out", "o",
                         "--ned-unit", "byte"}),
                  UsageError);
  CHECK(RunMain({"eval", "--bogus"}) == 1);
  CHECK(RunMain({"--help"}) == 0);
}

TEST_CASE("exit codes") {
  TempDir dir;
  const std::string corpus = Fixture("behavior10/corpus.jsonl").string();
  const std::string preds = Fixture("behavior10/predictions.jsonl").string();
  std::string err;
  CHECK(RunMain({"eval", "--corpus", corpus, "--preds", preds, "--out", (dir / "ok").string()},
                nullptr, &err) == 0);
  CHECK(err.find("seed=42") != std::string::npos);
  CHECK(Slurp(dir / "ok" / "behavior.csv").find("Copy,8,80.000000") != std::string::npos);

  testing::Spit(dir / "bad.jsonl", "{\"id\":\"zzz\",\"step\":1,\"prediction\":\"x\"}\n");
  CHECK(RunMain({"eval", "--corpus", corpus, "--preds", (dir / "bad.jsonl").string(), "--out",
                 (dir / "bad").string()},
                nullptr, &err) == 1);
  CHECK(err.find("zzz") != std::string::npos);

  CHECK(RunMain({"eval", "--corpus", corpus, "--preds", preds, "--out", (dir / "g").string(),
                 "--grammar", "none"}) == 2);
  CHECK(RunMain({"eval", "--corpus", (dir / "missing.jsonl").string(), "--preds", preds,
                 "--out", (dir / "m").string()}) == 1);
}

TEST_CASE("check writes one verdict per snippet") {
  std::string out;
  std::string err;
  REQUIRE(RunMain({"check", "--input", Fixture("syntax_validity_94.jsonl").string()}, &out,
                  &err) == 0);
  const auto lines = SplitLines(out);
  CHECK(lines.size() == 100);
  const auto first = nlohmann::json::parse(lines[0]);
  CHECK(first.at("id") == "sv-000");
  CHECK(first.at("valid") == true);
  CHECK(err.find("94.000000") != std::string::npos);
}

TEST_CASE("stats and export") {
  TempDir dir;
  std::string out;
  REQUIRE(RunMain({"stats", "--corpus", Fixture("track/corpus.jsonl").string(), "--export",
                   (dir / "canon.jsonl").string()},
                  &out) == 0);
  const auto j = nlohmann::json::parse(out);
  CHECK(j.at("n") == 170);
  CHECK(j.at("n_per_split").at("valid") == 150);
  CHECK(SplitLines(Slurp(dir / "canon.jsonl")).size() == 170);
}

TEST_CASE("abstract writes text, mappings and conformance") {
  TempDir dir;
  testing::Spit(dir / "c.jsonl",
                "{\"id\":\"a\",\"buggy\":\"int r = x . f ( ) ;\",\"fixed\":\"int r = y . f ( ) ;\"}\n"
                "{\"id\":\"b\",\"buggy\":\"int r = ( ;\",\"fixed\":\"int r ;\"}\n");
  CHECK(RunMain({"abstract", "--corpus", (dir / "c.jsonl").string(), "--out",
                 (dir / "o").string()}) == 1);
  REQUIRE(RunMain({"abstract", "--corpus", (dir / "c.jsonl").string(), "--out",
                   (dir / "o").string(), "--skip-unparseable"}) == 0);
  const auto lines = SplitLines(Slurp(dir / "o" / "abstracted.jsonl"));
  REQUIRE(lines.size() == 1);
  const auto j = nlohmann::json::parse(lines[0]);
  CHECK(j.at("buggy") == "int VAR_1 = VAR_2 . METHOD_1 ( ) ;");
  CHECK(j.at("fixed") == "int VAR_1 = VAR_3 . METHOD_1 ( ) ;");
  CHECK(std::filesystem::exists(dir / "o" / "mappings.jsonl"));
  CHECK(std::filesystem::exists(dir / "o" / "conformance.jsonl"));
}

TEST_CASE("inspect writes a case bundle") {
  TempDir dir;
  REQUIRE(RunMain({"inspect", "--corpus", Fixture("behavior10/corpus.jsonl").string(),
                   "--preds", Fixture("behavior10/predictions.jsonl").string(), "--out",
                   (dir / "o").string(), "--k", "3"}) == 0);
  const auto j = nlohmann::json::parse(Slurp(dir / "o" / "cases.json"));
  CHECK(j.at("cases").size() == 3);
  CHECK(j.at("step") == 32730);
}

}  // namespace
}  // namespace repairlens::cli
