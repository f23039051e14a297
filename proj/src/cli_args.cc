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

#include <CLI11.hpp>

#include <algorithm>
#include <thread>

#include "repairlens/cli.h"
#include "repairlens/errors.h"

namespace repairlens::cli {

namespace {

constexpr char kSchemaFooter[] = R"(File schemas (one JSON object per line, UTF-8):
  corpus       {"id": str, "buggy": str, "fixed": str, "split": "train"|"valid"|"test"}
               split is optional and defaults to "test".
  predictions  {"id": str, "step": int >= 0, "prediction": str, "rank": int >= 0}
               rank is optional and defaults to 0; only rank 0 is scored.
  loss log     {"step": int, "train_loss": real, "eval_loss": real}
               both losses optional.
  check input  {"id": str, "<field>": str}, field defaults to "code".
CodeXGLUE refinement directories (<split>.buggy-fixed.buggy/.fixed) can
replace --corpus via --codexglue-dir.

Exit status: 0 success, 1 input or usage error, 2 environment error.)";

struct Flags {
  std::string corpus;
  std::string codexglue_dir;
  std::string predictions;
  std::string loss_log;
  std::string input;
  std::string out_dir;
  std::string export_path;
  std::string em = "strict";
  std::string ned_unit = "char";
  std::string split;
  std::int64_t step = -1;
  double steps_per_epoch = 0.0;
};

void AddCorpusFlags(CLI::App* app, Flags& flags) {
  app->add_option("--corpus", flags.corpus, "Bug-fix corpus (JSONL)");
  app->add_option("--codexglue-dir", flags.codexglue_dir,
                  "CodeXGLUE refinement directory, converted on load");
}

void AddMetricFlags(CLI::App* app, Flags& flags) {
  app->add_option("--em-normalization", flags.em, "Exact-match comparison")
      ->check(CLI::IsMember({"strict", "whitespace"}));
  app->add_option("--ned-unit", flags.ned_unit, "Edit-distance unit")
      ->check(CLI::IsMember({"char", "token"}));
}

void AddRunFlags(CLI::App* app, RunConfig& config) {
  app->add_option("--grammar", config.grammar, "Parser binding")
      ->capture_default_str();
  app->add_option("--jobs", config.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

std::string_view CommandName(Command command) {
  switch (command) {
    case Command::kEval:
      return "eval";
    case Command::kTrack:
      return "track";
    case Command::kAbstract:
      return "abstract";
    case Command::kCheck:
      return "check";
    case Command::kInspect:
      return "inspect";
    case Command::kStats:
      return "stats";
  }
  return "eval";
}

RunConfig ParseArgs(std::span<const std::string> args) {
  RunConfig config;
  config.jobs = std::max(1u, std::thread::hardware_concurrency());
  Flags flags;

  CLI::App app{"repairlens: syntax, similarity and behavior diagnostics for "
               "program-repair model outputs",
               "repairlens"};
  app.footer(kSchemaFooter);
  app.require_subcommand(1, 1);

  CLI::App* stats = app.add_subcommand("stats", "Corpus statistics");
  AddCorpusFlags(stats, flags);
  stats->add_option("--export", flags.export_path,
                    "Also write the corpus in canonical JSONL form");
  stats->add_option("--out", flags.out_dir, "Write stats.json here instead of stdout");

  CLI::App* check = app.add_subcommand("check", "Syntax verdicts for a file of snippets");
  check->add_option("--input", flags.input, "Snippet records (JSONL)")->required();
  check->add_option("--field", config.field, "Record field holding the code")
      ->capture_default_str();
  check->add_option("--out", flags.out_dir, "Write verdicts.jsonl here instead of stdout");
  AddRunFlags(check, config);

  CLI::App* abstract = app.add_subcommand("abstract", "Identifier abstraction");
  AddCorpusFlags(abstract, flags);
  abstract->add_option("--out", flags.out_dir, "Output directory")->required();
  abstract->add_flag("--strict-gaps", config.strict_gaps,
                     "Reject placeholder index gaps in the conformance check");
  abstract->add_flag("--skip-unparseable", config.skip_unparseable,
                     "Skip examples that do not parse instead of failing");
  AddRunFlags(abstract, config);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate one prediction set");
  CLI::App* track = app.add_subcommand("track", "Evaluate every checkpoint in a dump");
  CLI::App* inspect = app.add_subcommand("inspect", "Emit a seeded case bundle");
  for (CLI::App* sub : {eval, track, inspect}) {
    AddCorpusFlags(sub, flags);
    sub->add_option("--preds", flags.predictions, "Predictions (JSONL)")->required();
    sub->add_option("--out", flags.out_dir, "Output directory")->required();
    sub->add_option("--seed", config.seed, "Sampling seed")->capture_default_str();
    sub->add_option("--split", flags.split, "Restrict to one split")
        ->check(CLI::IsMember({"train", "valid", "test"}));
    AddMetricFlags(sub, flags);
    AddRunFlags(sub, config);
  }
  for (CLI::App* sub : {eval, inspect}) {
    sub->add_option("--step", flags.step, "Checkpoint to evaluate (default: latest)")
        ->check(CLI::NonNegativeNumber);
  }
  for (CLI::App* sub : {eval, track}) {
    sub->add_option("--loss-log", flags.loss_log, "Loss log (JSONL) to attach by step");
    sub->add_option("--steps-per-epoch", flags.steps_per_epoch,
                    "Recorded in the report for axis conversion")
        ->check(CLI::PositiveNumber);
  }
  track->add_option("--interval", config.interval_steps, "Evaluation cadence in steps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  track->add_option("--sample", config.sample_size, "Validation examples per checkpoint")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  track->add_flag("--fixed-sample", config.fixed_sample,
                  "Use one validation sample for every checkpoint");
  inspect->add_option("--k", config.cases, "Number of cases")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    throw HelpRequested(subs.empty() ? app.help() : subs.front()->help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  for (Command c : {Command::kEval, Command::kTrack, Command::kAbstract, Command::kCheck,
                    Command::kInspect, Command::kStats}) {
    if (CommandName(c) == name) config.command = c;
  }

  config.corpus = flags.corpus;
  config.codexglue_dir = flags.codexglue_dir;
  config.predictions = flags.predictions;
  config.loss_log = flags.loss_log;
  config.input = flags.input;
  config.out_dir = flags.out_dir;
  config.export_path = flags.export_path;
  config.em = flags.em == "whitespace" ? EmNormalization::kWhitespace : EmNormalization::kStrict;
  config.ned_unit = flags.ned_unit == "token" ? NedUnit::kToken : NedUnit::kCharacter;
  if (!flags.split.empty()) config.split = ParseSplit(flags.split);
  if (flags.step >= 0) config.step = flags.step;
  if (flags.steps_per_epoch > 0.0) config.steps_per_epoch = flags.steps_per_epoch;

  if (config.command != Command::kCheck) {
    if (flags.corpus.empty() == flags.codexglue_dir.empty()) {
      throw UsageError(name + ": exactly one of --corpus or --codexglue-dir is required");
    }
  }
  if (config.command == Command::kTrack && !config.split) config.split = Split::kValid;
  return config;
}

}  // namespace repairlens::cli
