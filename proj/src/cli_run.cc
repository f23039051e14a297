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

#include <json.hpp>
#include <ostream>
#include <unordered_set>

#include "repairlens/abstraction.h"
#include "repairlens/cli.h"
#include "repairlens/corpus.h"
#include "repairlens/errors.h"
#include "repairlens/io.h"
#include "repairlens/report.h"
#include "repairlens/syntax.h"
#include "repairlens/text.h"
#include "repairlens/tracking.h"

namespace repairlens::cli {

namespace {

using OJson = nlohmann::ordered_json;

struct LoadedCorpus {
  Corpus corpus;
  InputDigest digest;
};

LoadedCorpus LoadCorpus(const RunConfig& config) {
  if (!config.corpus.empty()) {
    const std::string content = ReadFile(config.corpus);
    return {Corpus(ParseExamples(content, config.corpus.string())),
            {"corpus", config.corpus.filename().string(), Sha256Hex(content)}};
  }
  std::vector<RepairExample> examples = ImportCodeXGlue(config.codexglue_dir);
  // Digest the canonical form so the provenance does not depend on how the
  // directory was laid out.
  const std::string canonical = SerializeExamples(examples);
  return {Corpus(std::move(examples)),
          {"corpus", config.codexglue_dir.filename().string(), Sha256Hex(canonical)}};
}

void LogProvenance(std::ostream& err, const RunConfig& config,
                   const std::vector<InputDigest>& inputs) {
  err << "repairlens " << CommandName(config.command) << ": seed=" << config.seed << "\n";
  for (const InputDigest& d : inputs) {
    err << "repairlens " << CommandName(config.command) << ": input " << d.role << " "
        << d.file_name << " sha256=" << d.sha256 << "\n";
  }
}

MetricOptions MetricsFrom(const RunConfig& config) {
  return {config.em, config.ned_unit};
}

Provenance ProvenanceFrom(const RunConfig& config, std::vector<InputDigest> inputs) {
  Provenance p;
  p.seed = config.seed;
  p.command = std::string(CommandName(config.command));
  p.parser_binding = config.grammar;
  p.sample_size = config.sample_size;
  p.interval_steps = config.interval_steps;
  p.fixed_sample = config.fixed_sample;
  p.em_normalization = config.em == EmNormalization::kWhitespace ? "whitespace" : "strict";
  p.ned_unit = config.ned_unit == NedUnit::kToken ? "token" : "character";
  p.inputs = std::move(inputs);
  return p;
}

std::string VerdictLine(const std::string& id, const SyntaxVerdict& v) {
  OJson spans = OJson::array();
  for (const ByteSpan& s : v.error_spans) spans.push_back(OJson::array({s.begin, s.end}));
  OJson j{{"id", id},
          {"valid", v.valid},
          {"error_count", v.error_count},
          {"error_spans", std::move(spans)},
          {"empty_input", v.empty_input}};
  return j.dump(-1, ' ', false, OJson::error_handler_t::replace) + "\n";
}

int RunStats(const RunConfig& config, std::ostream& out, std::ostream& err) {
  LoadedCorpus loaded = LoadCorpus(config);
  LogProvenance(err, config, {loaded.digest});
  const CorpusStats stats = ComputeCorpusStats(loaded.corpus.examples());
  OJson per_split;
  for (Split split : kAllSplits) {
    per_split[std::string(SplitName(split))] = stats.n_per_split[static_cast<std::size_t>(split)];
  }
  const OJson j{{"n", stats.n},
                {"n_per_split", per_split},
                {"mean_token_length", RoundFixed6(stats.mean_token_length)},
                {"identity_pair_fraction", RoundFixed6(stats.identity_pair_fraction)}};
  const std::string text = j.dump(2) + "\n";
  if (!config.export_path.empty()) {
    WriteFileAtomic(config.export_path, SerializeExamples(loaded.corpus.examples()));
  }
  if (config.out_dir.empty()) {
    out << text;
  } else {
    EnsureDirectory(config.out_dir);
    WriteFileAtomic(config.out_dir / "stats.json", text);
  }
  return 0;
}

int RunCheck(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::string content = ReadFile(config.input);
  LogProvenance(err, config, {{"snippets", config.input.filename().string(), Sha256Hex(content)}});
  const std::unique_ptr<JavaParser> parser = MakeParser(config.grammar);

  std::string verdicts;
  std::vector<SyntaxVerdict> all;
  const std::vector<std::string> lines = SplitLines(content);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    OJson record;
    try {
      record = OJson::parse(lines[i]);
    } catch (const OJson::parse_error& e) {
      throw InputError(config.input.string() + ": malformed record: " + e.what(), i + 1);
    }
    if (!record.is_object() || !record.contains(config.field) ||
        !record[config.field].is_string()) {
      throw InputError(config.input.string() + ": field '" + config.field +
                           "' missing or not a string",
                       i + 1);
    }
    std::string id = "line-" + std::to_string(i + 1);
    if (record.contains("id") && record["id"].is_string()) id = record["id"].get<std::string>();
    all.push_back(CheckSyntax(record[config.field].get<std::string>(), *parser));
    verdicts += VerdictLine(id, all.back());
  }
  if (config.out_dir.empty()) {
    out << verdicts;
  } else {
    EnsureDirectory(config.out_dir);
    WriteFileAtomic(config.out_dir / "verdicts.jsonl", verdicts);
  }
  if (!all.empty()) {
    err << "repairlens check: " << all.size()
        << " snippets, syntax validity " << FormatFixed6(SyntaxValidity(all)) << "%\n";
  }
  return 0;
}

OJson MappingToJson(const std::string& id, const AbstractionMapping& mapping) {
  OJson j{{"id", id}};
  for (IdentifierCategory category : kAllCategories) {
    OJson pairs = OJson::array();
    for (const auto& [original, placeholder] : mapping.entries(category)) {
      pairs.push_back(OJson::array({original, placeholder}));
    }
    j[std::string(CategoryName(category))] = std::move(pairs);
  }
  return j;
}

int RunAbstract(const RunConfig& config, std::ostream& out, std::ostream& err) {
  LoadedCorpus loaded = LoadCorpus(config);
  LogProvenance(err, config, {loaded.digest});
  const std::unique_ptr<JavaParser> parser = MakeParser(config.grammar);

  std::vector<RepairExample> abstracted;
  std::string mappings;
  std::string conformance;
  std::size_t skipped = 0;
  for (const RepairExample& ex : loaded.corpus.examples()) {
    AbstractionMapping mapping;
    RepairExample result = ex;
    try {
      result.buggy = AbstractIdentifiers(ex.buggy, *parser, mapping);
      result.fixed = AbstractIdentifiers(ex.fixed, *parser, mapping);
    } catch (const UnparseableCodeError& e) {
      if (!config.skip_unparseable) {
        throw InputError("example '" + ex.id + "': " + e.what());
      }
      ++skipped;
      continue;
    }
    for (const auto& [side, text] : {std::pair{"buggy", &result.buggy},
                                     std::pair{"fixed", &result.fixed}}) {
      const AbstractionReport report = CheckConformance(*text, {config.strict_gaps});
      if (report.conformant) continue;
      OJson violations = OJson::array();
      for (const AbstractionViolation& v : report.violations) {
        violations.push_back({{"span", OJson::array({v.span.begin, v.span.end})},
                              {"description", v.description}});
      }
      conformance += OJson{{"id", ex.id}, {"side", side}, {"violations", violations}}.dump() + "\n";
    }
    mappings += MappingToJson(ex.id, mapping).dump(-1, ' ', false,
                                                   OJson::error_handler_t::replace) + "\n";
    abstracted.push_back(std::move(result));
  }
  EnsureDirectory(config.out_dir);
  WriteFileAtomic(config.out_dir / "abstracted.jsonl", SerializeExamples(abstracted));
  WriteFileAtomic(config.out_dir / "mappings.jsonl", mappings);
  WriteFileAtomic(config.out_dir / "conformance.jsonl", conformance);
  out << "abstracted " << abstracted.size() << " examples";
  if (skipped > 0) out << ", skipped " << skipped << " unparseable";
  out << "\n";
  return 0;
}

struct Evaluated {
  LoadedCorpus loaded;
  std::vector<Prediction> predictions;
  std::vector<InputDigest> inputs;
};

Evaluated LoadForEvaluation(const RunConfig& config, std::ostream& err) {
  Evaluated ev;
  ev.loaded = LoadCorpus(config);
  const std::string content = ReadFile(config.predictions);
  ev.predictions = ParsePredictions(content, config.predictions.string(), ev.loaded.corpus);
  if (ev.predictions.empty()) throw InputError(config.predictions.string() + ": no predictions");
  ev.inputs = {ev.loaded.digest,
               {"predictions", config.predictions.filename().string(), Sha256Hex(content)}};
  if (!config.loss_log.empty()) ev.inputs.push_back(DigestFile("loss_log", config.loss_log));
  LogProvenance(err, config, ev.inputs);
  return ev;
}

// Evaluates every example (in the split filter) holding a rank-0
// prediction at the chosen step.
CheckpointEvaluation EvaluateSet(const RunConfig& config, const Evaluated& ev,
                                 std::vector<Prediction>& at_step) {
  auto by_step = GroupByStep(ev.predictions);
  const std::int64_t step = config.step.value_or(by_step.rbegin()->first);
  const auto it = by_step.find(step);
  if (it == by_step.end()) {
    throw InputError("no predictions at step " + std::to_string(step));
  }
  at_step = std::move(it->second);
  std::unordered_set<std::string_view> has_top;
  for (const Prediction& p : at_step) {
    if (p.rank == 0) has_top.insert(p.example_id);
  }
  std::vector<RepairExample> examples;
  for (const RepairExample& ex : ev.loaded.corpus.examples()) {
    if (config.split && ex.split != *config.split) continue;
    if (has_top.contains(ex.id)) examples.push_back(ex);
  }
  if (examples.empty()) {
    throw InputError("no rank-0 predictions at step " + std::to_string(step) +
                     (config.split ? " in split " + std::string(SplitName(*config.split)) : ""));
  }
  return EvaluateCheckpoint(examples, at_step, MakeParserFactory(config.grammar),
                            {MetricsFrom(config), config.jobs});
}

void WriteReport(const RunConfig& config, const Evaluated& ev,
                 std::vector<CheckpointEvaluation> checkpoints, std::ostream& out) {
  if (!config.loss_log.empty()) {
    const auto losses = LoadLossLog(config.loss_log);
    for (CheckpointEvaluation& c : checkpoints) {
      std::vector<CheckpointRecord> one{c.record};
      AttachLosses(one, losses);
      c.record = one.front();
    }
  }
  const EvalReport report =
      BuildReport(ComputeCorpusStats(ev.loaded.corpus.examples()), std::move(checkpoints),
                  ProvenanceFrom(config, ev.inputs), config.steps_per_epoch);
  EmitReport(report, config.out_dir);
  if (report.final) {
    const CheckpointRecord& f = *report.final;
    out << "step " << f.step << ": n=" << f.n
        << " syntax_validity=" << FormatFixed6(f.syntax_validity_pct)
        << " exact_match=" << FormatFixed6(f.exact_match_pct)
        << " copy=" << FormatFixed6(f.copy_pct)
        << " modification=" << FormatFixed6(f.modification_pct)
        << " ned_mean=" << FormatFixed6(f.ned_stats.mean) << "\n";
  }
  out << "wrote report to " << config.out_dir.string() << "\n";
}

int RunEval(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Evaluated ev = LoadForEvaluation(config, err);
  std::vector<Prediction> at_step;
  std::vector<CheckpointEvaluation> checkpoints;
  checkpoints.push_back(EvaluateSet(config, ev, at_step));
  WriteReport(config, ev, std::move(checkpoints), out);
  return 0;
}

int RunTrack(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Evaluated ev = LoadForEvaluation(config, err);
  const Split split = config.split.value_or(Split::kValid);
  const std::vector<RepairExample> pool = ev.loaded.corpus.InSplit(split);
  if (pool.empty()) {
    throw InputError("corpus has no '" + std::string(SplitName(split)) + "' examples to sample");
  }
  TrackingConfig tracking;
  tracking.sample_size = config.sample_size;
  tracking.interval_steps = config.interval_steps;
  tracking.seed = config.seed;
  tracking.fixed_sample = config.fixed_sample;
  tracking.Validate();

  const ParserFactory factory = MakeParserFactory(config.grammar);
  std::vector<CheckpointEvaluation> checkpoints;
  for (const auto& [step, predictions] : GroupByStep(ev.predictions)) {
    const std::vector<RepairExample> sample = SampleValidation(pool, tracking, step);
    checkpoints.push_back(EvaluateCheckpoint(sample, predictions, factory,
                                             {MetricsFrom(config), config.jobs}));
  }
  WriteReport(config, ev, std::move(checkpoints), out);
  return 0;
}

int RunInspect(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Evaluated ev = LoadForEvaluation(config, err);
  std::vector<Prediction> at_step;
  const CheckpointEvaluation evaluation = EvaluateSet(config, ev, at_step);
  const std::unique_ptr<JavaParser> parser = MakeParser(config.grammar);
  const CaseBundle bundle = ExtractCases(ev.loaded.corpus, at_step, evaluation.records,
                                         config.cases, config.seed, *parser);
  EmitCases(bundle, config.out_dir);
  out << "wrote " << bundle.cases.size() << " cases to "
      << (config.out_dir / "cases.json").string() << "\n";
  return 0;
}

}  // namespace

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kStats:
        return RunStats(config, out, err);
      case Command::kCheck:
        return RunCheck(config, out, err);
      case Command::kAbstract:
        return RunAbstract(config, out, err);
      case Command::kEval:
        return RunEval(config, out, err);
      case Command::kTrack:
        return RunTrack(config, out, err);
      case Command::kInspect:
        return RunInspect(config, out, err);
    }
  } catch (const InputError& e) {
    err << "repairlens: error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "repairlens: usage error: " << e.what() << "\n";
    return 1;
  } catch (const EnvironmentError& e) {
    err << "repairlens: environment error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "repairlens: internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int Main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = ParseArgs(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  } catch (const UsageError& e) {
    err << "repairlens: usage error: " << e.what() << "\n"
        << "run 'repairlens --help' for usage\n";
    return 1;
  }
  return Run(config, out, err);
}

}  // namespace repairlens::cli
