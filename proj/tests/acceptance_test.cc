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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "repairlens/abstraction.h"
#include "repairlens/cli.h"
#include "repairlens/edit_distance.h"
#include "repairlens/io.h"
#include "repairlens/metrics.h"
#include "repairlens/syntax.h"
#include "repairlens/text.h"

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

fs::path Fixture(const std::string& rel) { return fs::path(REPAIRLENS_FIXTURES) / rel; }

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

fs::path Scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() /
                     ("repairlens-acceptance-" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int RunCli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  return repairlens::cli::Main(args, out, err);
}

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t Oracle(std::string_view a, std::string_view b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

std::string Random(std::mt19937_64& gen, std::size_t max_len, std::string_view alphabet) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s(len(gen), ' ');
  for (char& c : s) c = alphabet[pick(gen)];
  return s;
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome BehaviorDistribution() {
  const auto start = Clock::now();
  const fs::path out = Scratch("c1");
  const int code = RunCli({"eval", "--corpus", Fixture("behavior10/corpus.jsonl").string(),
                           "--preds", Fixture("behavior10/predictions.jsonl").string(),
                           "--out", out.string(), "--jobs", "1"});
  const double secs = Seconds(start);
  const std::string csv = Slurp(out / "behavior.csv");
  const std::string want =
      "class,count,percentage\n"
      "ExactMatch,0,0.000000\n"
      "Copy,8,80.000000\n"
      "Modification,2,20.000000\n";
  const bool ok = code == 0 && csv == want && secs < 1.0;
  return {ok, "EM 0.0% / Copy 80.0% / Modification 20.0% in behavior.csv, " +
                  std::to_string(secs) + " s"};
}

Outcome SyntaxValidityArithmetic() {
  const fs::path out = Scratch("c2");
  std::ostringstream so;
  std::ostringstream se;
  const int code =
      repairlens::cli::Main(std::vector<std::string>{"check", "--input",
                                                     Fixture("syntax_validity_94.jsonl").string(),
                                                     "--out", out.string()},
                            so, se);
  std::size_t valid = 0;
  std::size_t total = 0;
  bool labels_agree = true;
  std::vector<nlohmann::json> inputs;
  for (const auto& line : repairlens::SplitLines(Slurp(Fixture("syntax_validity_94.jsonl")))) {
    if (!line.empty()) inputs.push_back(nlohmann::json::parse(line));
  }
  std::size_t i = 0;
  for (const auto& line : repairlens::SplitLines(Slurp(out / "verdicts.jsonl"))) {
    if (line.empty()) continue;
    const auto v = nlohmann::json::parse(line);
    ++total;
    if (v.at("valid").get<bool>()) ++valid;
    if (i < inputs.size() && v.at("valid").get<bool>() != (inputs[i].at("label") == "valid")) {
      labels_agree = false;
    }
    ++i;
  }
  const double sv = total ? 100.0 * static_cast<double>(valid) / static_cast<double>(total) : 0;
  const bool reported = se.str().find("94.000000") != std::string::npos;
  return {code == 0 && total == 100 && sv == 94.0 && reported && labels_agree,
          "syntax_validity " + repairlens::FormatFixed6(sv) + " over " + std::to_string(total) +
              " snippets"};
}

Outcome SyntaxFidelity() {
  auto parser = repairlens::MakeParser();
  const auto start = Clock::now();
  std::size_t agree = 0;
  std::size_t total = 0;
  for (const auto& line : repairlens::SplitLines(Slurp(Fixture("syntax_fidelity.jsonl")))) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    const bool label = j.at("label") == "valid";
    if (repairlens::CheckSyntax(j.at("code").get<std::string>(), *parser).valid == label) ++agree;
    ++total;
  }
  const double secs = Seconds(start);
  return {total == 100 && agree == total && secs < 2.0,
          std::to_string(agree) + "/" + std::to_string(total) + " agree, " +
              std::to_string(secs) + " s"};
}

Outcome EditDistanceOracle() {
  const auto start = Clock::now();
  std::mt19937_64 gen(4242);
  std::size_t mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = Random(gen, 30, "abcdef");
    const auto b = Random(gen, 30, "abcdef");
    if (repairlens::Levenshtein(a, b) != Oracle(a, b)) ++mismatches;
  }
  std::size_t axiom_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = Random(gen, 20, "abc");
    const auto b = Random(gen, 20, "abc");
    const auto c = Random(gen, 20, "abc");
    const auto ab = repairlens::Levenshtein(a, b);
    if (ab != repairlens::Levenshtein(b, a)) ++axiom_failures;
    if (repairlens::Levenshtein(a, a) != 0 || (ab == 0) != (a == b)) ++axiom_failures;
    if (repairlens::Levenshtein(a, c) > ab + repairlens::Levenshtein(b, c)) ++axiom_failures;
  }
  const double secs = Seconds(start);
  return {mismatches == 0 && axiom_failures == 0 && secs < 5.0,
          std::to_string(mismatches) + " oracle mismatches, " + std::to_string(axiom_failures) +
              " axiom failures, " + std::to_string(secs) + " s"};
}

Outcome NedBounds() {
  std::mt19937_64 gen(777);
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = Random(gen, 10, "ab");
    const auto b = Random(gen, 10, "ab");
    const double ned = repairlens::NormalizedEditDistance(a, b);
    if (ned < 0.0 || ned > 1.0) ++failures;
    if (!a.empty() && !b.empty() && (ned == 0.0) != repairlens::ExactMatch(a, b)) ++failures;
    if (a.empty() != b.empty() && ned != 1.0) ++failures;
  }
  if (repairlens::NormalizedEditDistance("", "x") != 1.0) ++failures;
  if (repairlens::NormalizedEditDistance("abc", "") != 1.0) ++failures;
  return {failures == 0, std::to_string(failures) + " violations over 1000 pairs"};
}

Outcome Determinism() {
  const fs::path a = Scratch("c6a");
  const fs::path b = Scratch("c6b");
  auto args = [](const fs::path& out) {
    return std::vector<std::string>{
        "track", "--corpus", Fixture("track/corpus.jsonl").string(), "--preds",
        Fixture("track/predictions.jsonl").string(), "--loss-log",
        Fixture("track/loss.jsonl").string(), "--out", out.string(), "--seed", "42",
        "--sample", "100", "--interval", "500"};
  };
  auto args_b = args(b);
  args_b.push_back("--jobs");
  args_b.push_back("3");
  const int ca = RunCli(args(a));
  const int cb = RunCli(args_b);
  std::size_t identical = 0;
  const std::vector<std::string> files = {"checkpoints.csv", "behavior.csv", "table1.csv",
                                          "report.json"};
  for (const auto& f : files) {
    if (fs::exists(a / f) && Slurp(a / f) == Slurp(b / f)) ++identical;
  }
  return {ca == 0 && cb == 0 && identical == files.size(),
          std::to_string(identical) + "/4 artifacts byte-identical"};
}

Outcome Aggregation() {
  const std::vector<double> v = {0.2, 0.4, 0.6};
  const auto s = repairlens::Aggregate(v);
  const double want = std::sqrt(2.0 / 75.0);
  const bool ok = std::abs(s.mean - 0.4) < 1e-12 && s.median == 0.4 &&
                  std::abs(s.stddev - want) < 1e-9;
  std::ostringstream d;
  d.precision(12);
  d << "mean " << s.mean << ", median " << s.median << ", std " << s.stddev;
  return {ok, d.str()};
}

std::string Canonical(std::string_view text) {
  std::string out;
  std::array<std::map<std::size_t, std::size_t>, 3> seen;
  std::size_t i = 0;
  auto word_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < text.size()) {
    if (!word_char(text[i])) {
      out += text[i++];
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && word_char(text[j])) ++j;
    const std::string_view word = text.substr(i, j - i);
    if (const auto p = repairlens::ParsePlaceholder(word)) {
      auto& m = seen[static_cast<std::size_t>(p->category)];
      const auto it = m.emplace(p->index, m.size() + 1).first;
      out += std::string(repairlens::PlaceholderPrefix(p->category)) + "_" +
             std::to_string(it->second);
    } else {
      out += word;
    }
    i = j;
  }
  return out;
}

Outcome AbstractionIdempotence() {
  auto parser = repairlens::MakeParser();
  std::size_t idempotent = 0;
  std::size_t valid = 0;
  std::size_t total = 0;
  for (const auto& line : repairlens::SplitLines(Slurp(Fixture("abstraction20.jsonl")))) {
    if (line.empty()) continue;
    ++total;
    const std::string code = nlohmann::json::parse(line).at("code");
    try {
      const auto once = repairlens::AbstractIdentifiers(code, *parser).text;
      const auto twice = repairlens::AbstractIdentifiers(once, *parser).text;
      if (Canonical(once) == Canonical(twice)) ++idempotent;
      if (repairlens::CheckSyntax(once, *parser).valid) ++valid;
    } catch (const std::exception&) {
    }
  }
  return {total == 20 && idempotent == total && valid == total,
          std::to_string(idempotent) + "/" + std::to_string(total) + " idempotent, " +
              std::to_string(valid) + "/" + std::to_string(total) + " syntax-valid"};
}

Outcome LossPassThrough() {
  // Trained-model numbers need the original prediction dumps; what can be
  // checked here is that ingested losses reach the report unchanged.
  const fs::path out = Scratch("c9");
  const int code = RunCli({"track", "--corpus", Fixture("track/corpus.jsonl").string(),
                           "--preds", Fixture("track/predictions.jsonl").string(),
                           "--loss-log", Fixture("track/loss.jsonl").string(), "--out",
                           out.string()});
  bool echoed = false;
  if (code == 0) {
    const auto j = nlohmann::json::parse(Slurp(out / "report.json"));
    echoed = j.at("final").at("eval_loss") == 0.076;
  }
  return {code == 0 && echoed,
          "not reproducible without the original model outputs; ingested eval loss echoed: " +
              std::string(echoed ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"behavior distribution reproduction", BehaviorDistribution},
      {"syntax-validity arithmetic", SyntaxValidityArithmetic},
      {"syntax checker fidelity", SyntaxFidelity},
      {"edit-distance oracle equivalence", EditDistanceOracle},
      {"NED bounds and consistency", NedBounds},
      {"determinism of track", Determinism},
      {"aggregation correctness", Aggregation},
      {"abstraction idempotence and syntax preservation", AbstractionIdempotence},
      {"trained-model results (pass-through only)", LossPassThrough},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
              << criteria[i].first << " (" << outcome.detail << ")\n";
  }
  std::error_code ec;
  fs::remove_all(fs::temp_directory_path() /
                     ("repairlens-acceptance-" + std::to_string(::getpid())),
                 ec);
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
