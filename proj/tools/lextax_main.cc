// Copyright 2026 The Lextax Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Each subcommand runs one stage on explicit input
// files and writes its artifacts; `run` executes the whole pipeline from a
// config file.
//
// Exit codes: 0 success, 1 usage or config error, 2 data or format error,
// 3 internal invariant violation.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lextax/errors.h"
#include "lextax/genus_selector.h"
#include "lextax/labels.h"
#include "lextax/lexicon.h"
#include "lextax/parallel.h"
#include "lextax/pipeline.h"
#include "lextax/primary_labeller.h"
#include "lextax/reports.h"
#include "lextax/salience.h"
#include "lextax/semantic_labeller.h"
#include "lextax/taxonomy.h"
#include "lextax/text.h"

namespace lextax {
namespace {

namespace fs = std::filesystem;

struct Options {
  int threads = 0;
  bool serial = false;
  bool quiet = false;

  std::string dictionary;
  std::string skip_list;
  std::string net;
  std::string bilingual;
  std::string stopwords;
  std::string labels;
  std::string salience;
  std::string selection;
  std::string taxonomy;
  std::string gold;
  std::string selection_gold;
  std::string attachments;
  std::string cls;
  std::string strategy = "first-sense";
  std::string format = "text";
  bool f1 = false;
  bool f2 = false;
  int f3 = 0;
  std::vector<int> sweep;
  int round = 1;
  int rounds = 1;
  int top = 10;

  std::string out;
  std::string out_labels;
  std::string out_coverage;
  std::string out_histogram;
  std::string out_sweep;

  std::string config;
  std::map<std::string, std::string> overrides;
};

Execution ExecutionOf(const Options &o) {
  return o.serial ? Execution::kSerial : Execution::kParallel;
}

std::ostream &Report(const Options &o) {
  static std::ofstream null_stream;
  if (o.quiet) {
    null_stream.setstate(std::ios::badbit);
    return null_stream;
  }
  return std::cout;
}

SemanticNet Net(const Options &o) { return LoadSemanticNet(o.net); }
BilingualMap Bilingual(const Options &o) { return LoadBilingual(o.bilingual); }
StopwordList Stopwords(const Options &o) { return LoadStopwords(o.stopwords); }

Dictionary Dict(const Options &o) {
  std::optional<fs::path> skip;
  if (!o.skip_list.empty()) skip = o.skip_list;
  return LoadDictionary(o.dictionary, LoadSkipList(skip));
}

// Writes to `path`, or to stdout when `path` is empty or "-".
void Output(const std::string &path,
            const std::function<void(std::ostream &)> &writer) {
  if (path.empty() || path == "-") {
    writer(std::cout);
  } else {
    WriteFileAtomically(path, writer);
  }
}

void RunIngest(const Options &o) {
  Dictionary dict = Dict(o);
  if (!o.net.empty()) Net(o);
  if (!o.bilingual.empty()) Bilingual(o);
  Output(o.out, [&](std::ostream &out) { WriteSenseFile(dict, out); });
  DictionaryCounts counts = CountDictionary(dict);
  Report(o) << "senses: " << dict.size() << '\n'
            << "noun_definitions: " << counts.definitions << '\n'
            << "noun_definitions_with_genus: " << counts.definitions_with_genus
            << '\n'
            << "genus_terms: " << counts.genus_terms << '\n'
            << "headwords: " << counts.headwords << '\n';
}

void RunFirstPassCommand(const Options &o) {
  Dictionary dict = Dict(o);
  SemanticNet net = Net(o);
  BilingualMap bilingual = Bilingual(o);
  FirstPassResult first = RunFirstPass(dict, net, bilingual, ExecutionOf(o));
  Output(o.out_labels,
         [&](std::ostream &out) { WriteLabelledCorpus(first.labels, out); });
  if (!o.out_coverage.empty()) {
    Output(o.out_coverage,
           [&](std::ostream &out) { WriteCoverageJson(first.report, out); });
  }
  Report(o) << CoverageTable(first.report).ToAligned();
  WriteCoverageBlock(first.report, Report(o));
}

void PrintTraining(const Options &o, const SalienceTable &table) {
  ReportTable t;
  t.rows.push_back({"class", "senses", "content words", "salient words"});
  for (const ClassTrainingRow &r : TrainingSummary(table)) {
    t.rows.push_back({r.cls, std::to_string(r.senses),
                      std::to_string(r.content_words),
                      std::to_string(r.salient_words)});
  }
  Report(o) << t.ToAligned();
}

void RunTrain(const Options &o) {
  Dictionary dict = Dict(o);
  LabelledCorpus labels = LoadLabels(o.labels);
  SalienceTable table =
      TrainSalience(labels, dict, Stopwords(o), ExecutionOf(o));
  Output(o.out, [&](std::ostream &out) { WriteSalienceTable(table, out); });
  PrintTraining(o, table);
}

void RunLabel(const Options &o) {
  if (o.round < 1) throw UsageError("--round must be at least 1");
  Dictionary dict = Dict(o);
  SalienceTable table = LoadSalience(o.salience);
  SecondPassResult pass =
      RunSecondPass(dict, table, Stopwords(o), o.round, ExecutionOf(o));
  Output(o.out_labels,
         [&](std::ostream &out) { WriteLabelledCorpus(pass.labels, out); });
  if (!o.out_histogram.empty()) {
    Output(o.out_histogram,
           [&](std::ostream &out) { WriteHistogramTsv(pass.histogram, out); });
  }
  Report(o) << HistogramTable(pass.histogram).ToAligned()
            << "definitions: " << pass.definitions << '\n'
            << "unlabelled: " << pass.unlabelled.size() << '\n'
            << "ties: " << pass.ties << '\n';
}

void RunIterate(const Options &o) {
  if (o.rounds < 1) throw UsageError("--rounds must be at least 1");
  if (o.out.empty()) throw UsageError("--out directory is required");
  Dictionary dict = Dict(o);
  FirstPassResult first;
  first.labels = LoadLabels(o.labels);
  for (const Sense &s : dict.senses()) {
    if (s.pos == kNounPos) ++first.report.definitions;
  }
  std::vector<LabellingRound> rounds =
      IterateFrom(dict, first, Stopwords(o), o.rounds, ExecutionOf(o));
  const LabellingRound &last = rounds.back();
  fs::path dir = o.out;
  WriteFileAtomically(dir / "salience.tsv", [&](std::ostream &out) {
    WriteSalienceTable(*last.table, out);
  });
  WriteFileAtomically(dir / "labels.jsonl", [&](std::ostream &out) {
    WriteLabelledCorpus(last.labels, out);
  });
  WriteFileAtomically(dir / "histogram.tsv", [&](std::ostream &out) {
    WriteHistogramTsv(last.histogram, out);
  });
  WriteFileAtomically(dir / "rounds.tsv",
                      [&](std::ostream &out) { WriteRoundsTsv(rounds, out); });
  WriteRoundsTsv(rounds, Report(o));
}

void RunSelectGenus(const Options &o) {
  if (o.f3 < 0) throw UsageError("--f3 must be >= 0");
  Dictionary dict = Dict(o);
  SemanticNet net = Net(o);
  BilingualMap bilingual = Bilingual(o);
  LabelledCorpus labels = LoadLabels(o.labels);
  GenusFrequencyTable table = GenusFrequencyTable::Build(labels, dict, {o.cls});
  GenusSelection selection =
      ApplyFilters(table, o.cls, bilingual, net, {o.f1, o.f2, o.f3});
  Output(o.out, [&](std::ostream &out) { WriteSelection(selection, out); });

  GenusRowSummary summary = SummarizeRow(table, o.cls);
  Report(o) << TopGenusTable(TopGenusEntries(table, o.cls, bilingual,
                                             static_cast<size_t>(o.top)),
                             2, true)
                   .ToAligned()
            << "distinct genus terms: " << summary.distinct_genus << '\n'
            << "appearing more than once: " << summary.repeated_genus << " ("
            << FormatPercent(static_cast<double>(summary.repeated_genus),
                             static_cast<double>(summary.distinct_genus), 0)
            << ")\n"
            << "selected: " << selection.selected.size() << '\n';
  if (!o.sweep.empty()) {
    std::optional<SelectionGold> gold;
    if (!o.selection_gold.empty()) {
      std::ifstream in = OpenInput(o.selection_gold);
      gold = ParseSelectionGold(in);
    }
    SelectionReport report = BuildSelectionReport(
        table, o.cls, bilingual, net, o.sweep, gold ? &*gold : nullptr);
    if (!o.out_sweep.empty()) {
      Output(o.out_sweep,
             [&](std::ostream &out) { WriteSelectionReportTsv(report, out); });
    }
    Report(o) << '\n';
    WriteSelectionReportText(report, Report(o));
  }
}

void RunBuildTax(const Options &o) {
  Dictionary dict = Dict(o);
  SemanticNet net = Net(o);
  BilingualMap bilingual = Bilingual(o);
  LabelledCorpus labels = LoadLabels(o.labels);
  GenusSelection selection = LoadSelection(o.selection);
  GenusDisambiguator disambiguator(dict, net, bilingual,
                                   ParseGenusStrategy(o.strategy));
  PairCollection pairs =
      CollectPairs(labels, selection, dict, disambiguator, ExecutionOf(o));
  Taxonomy taxonomy = BuildTaxonomy(pairs.pairs, selection.cls);
  std::optional<AttachmentOutcome> attached;
  if (!o.attachments.empty()) {
    std::ifstream in = OpenInput(o.attachments);
    attached = ApplyAttachments(taxonomy, ParseAttachments(in));
  }
  CheckTaxonomy(taxonomy);
  Output(o.out, [&](std::ostream &out) {
    ExportTaxonomy(taxonomy, ExportFormat::kJson, out);
  });
  Report(o) << "pairs: " << pairs.pairs.size() << '\n'
            << "unresolved genus: " << pairs.unresolved.size() << '\n'
            << "self loops: " << pairs.self_loops.size() << '\n'
            << "edges: " << taxonomy.edges() << '\n'
            << "duplicate pairs dropped: " << taxonomy.duplicate_pairs.size()
            << '\n'
            << "cycles broken: " << taxonomy.dropped_cycles.size() << '\n'
            << "tops: " << taxonomy.tops.size() << '\n';
  if (attached) {
    Report(o) << "attachments applied: " << attached->applied.size()
              << ", skipped: " << attached->skipped.size() << '\n';
  }
}

void RunStats(const Options &o) {
  Taxonomy taxonomy = LoadTaxonomy(o.taxonomy);
  std::optional<Dictionary> dict;
  if (!o.dictionary.empty()) dict = Dict(o);
  TaxonomyStats stats = ComputeStats(taxonomy, dict ? &*dict : nullptr);
  if (!o.out.empty()) {
    Output(o.out, [&](std::ostream &out) { WriteStatsTsv(stats, out); });
  }
  Report(o) << TaxonomyComparisonTable(taxonomy.cls, {{"(1)", stats}})
                   .ToAligned()
            << "tops: " << stats.tops << '\n';
}

void RunEval(const Options &o) {
  Dictionary dict = Dict(o);
  LabelledCorpus labels = LoadLabels(o.labels);
  std::ifstream in = OpenInput(o.gold);
  Evaluation e = EvaluateLabels(labels, ParseGoldLabels(in), dict);
  for (const std::string &id : e.unknown) {
    std::cerr << "warning: gold sense " << id << " is not in the dictionary\n";
  }
  if (!o.out.empty()) {
    Output(o.out, [&](std::ostream &out) { WriteEvaluationJson(e, out); });
  }
  Report(o) << "evaluated: " << e.evaluated << '\n'
            << "correct: " << e.correct << '\n'
            << "accuracy: " << FormatPercent(e.accuracy, 1.0, 1) << '\n'
            << "coverage: " << FormatPercent(e.coverage, 1.0, 1) << '\n';
  ReportTable confusion;
  confusion.rows.push_back({"gold", "predicted", "count"});
  for (const auto &[gold_tag, row] : e.confusion) {
    for (const auto &[tag, n] : row) {
      confusion.rows.push_back({gold_tag, tag, std::to_string(n)});
    }
  }
  Report(o) << confusion.ToAligned();
}

void RunExport(const Options &o) {
  ExportFormat format = ParseExportFormat(o.format);
  Taxonomy taxonomy = LoadTaxonomy(o.taxonomy);
  Output(o.out, [&](std::ostream &out) { ExportTaxonomy(taxonomy, format, out); });
}

void RunAll(const Options &o) {
  PipelineConfig config;
  if (!o.config.empty()) config = LoadConfig(o.config);
  for (const auto &[key, value] : o.overrides) {
    SetConfigValue(config, key, value, fs::current_path());
  }
  Manifest manifest =
      RunPipeline(config, ExecutionOf(o), o.quiet ? nullptr : &std::cerr);
  Report(o) << "artifacts: " << manifest.artifacts.size() << " in "
            << config.output.string() << '\n';
}

int Main(int argc, char **argv) {
  CLI::App app{"Builds per-class taxonomies from a machine-readable dictionary."};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads,
                 "Threads for parallel kernels (default: OpenMP default)");
  app.add_flag("--serial", o.serial, "Use the serial reference kernels");
  app.add_flag("-q,--quiet", o.quiet, "Suppress reports on stdout");

  auto dictionary = [&](CLI::App *cmd) {
    cmd->add_option("--dictionary", o.dictionary, "Dictionary JSON lines")
        ->required();
    cmd->add_option("--skip-list", o.skip_list,
                    "Genus skip patterns (default: built-in list)");
  };
  auto resources = [&](CLI::App *cmd) {
    cmd->add_option("--net", o.net, "Semantic net TSV")->required();
    cmd->add_option("--bilingual", o.bilingual, "Bilingual map TSV")
        ->required();
  };

  CLI::App *ingest = app.add_subcommand(
      "ingest", "Parse and normalize the dictionary; validate resources");
  dictionary(ingest);
  ingest->add_option("--net", o.net, "Semantic net TSV to validate");
  ingest->add_option("--bilingual", o.bilingual, "Bilingual map to validate");
  ingest->add_option("-o,--out", o.out, "Normalized dictionary output");

  CLI::App *first = app.add_subcommand(
      "first-pass", "Label senses by conceptual distance");
  dictionary(first);
  resources(first);
  first->add_option("-o,--out", o.out_labels, "Labelled corpus output");
  first->add_option("--coverage", o.out_coverage, "Coverage JSON output");

  CLI::App *train = app.add_subcommand("train", "Train salient words");
  dictionary(train);
  train->add_option("--labels", o.labels, "Labelled corpus")->required();
  train->add_option("--stopwords", o.stopwords, "Stopword list")->required();
  train->add_option("-o,--out", o.out, "Salience table output");

  CLI::App *label = app.add_subcommand("label", "Relabel by salient words");
  dictionary(label);
  label->add_option("--salience", o.salience, "Salience table")->required();
  label->add_option("--stopwords", o.stopwords, "Stopword list")->required();
  label->add_option("--round", o.round, "Pass number recorded on labels")
      ->capture_default_str();
  label->add_option("-o,--out", o.out_labels, "Labelled corpus output");
  label->add_option("--histogram", o.out_histogram, "Histogram TSV output");

  CLI::App *iterate = app.add_subcommand(
      "iterate", "Alternate training and labelling from first-pass labels");
  dictionary(iterate);
  iterate->add_option("--labels", o.labels, "First-pass labels")->required();
  iterate->add_option("--stopwords", o.stopwords, "Stopword list")->required();
  iterate->add_option("--rounds", o.rounds, "Training rounds")
      ->capture_default_str();
  iterate->add_option("-o,--out", o.out, "Output directory")->required();

  CLI::App *select = app.add_subcommand(
      "select-genus", "Tabulate genus terms of a class and apply filters");
  dictionary(select);
  resources(select);
  select->add_option("--labels", o.labels, "Labelled corpus")->required();
  select->add_option("--class", o.cls, "Semantic class")->required();
  select->add_flag("--f1", o.f1, "Keep genus terms mapped to the class");
  select->add_flag("--f2", o.f2, "Keep genus terms most frequent in the class");
  select->add_option("--f3", o.f3, "Keep genus terms with count > N")
      ->capture_default_str();
  select->add_option("--sweep", o.sweep, "Thresholds for the sweep report")
      ->delimiter(',');
  select->add_option("--selection-gold", o.selection_gold,
                     "Judgements for sweep accuracy columns");
  select->add_option("--top", o.top, "Genus terms in the frequency table")
      ->capture_default_str();
  select->add_option("-o,--out", o.out, "Selection JSON output");
  select->add_option("--sweep-out", o.out_sweep, "Sweep TSV output");

  CLI::App *build = app.add_subcommand(
      "build-tax", "Disambiguate genus senses and assemble the taxonomy");
  dictionary(build);
  resources(build);
  build->add_option("--labels", o.labels, "Labelled corpus")->required();
  build->add_option("--selection", o.selection, "Selection JSON")->required();
  build->add_option("--strategy", o.strategy,
                    "first-sense or conceptual-distance")
      ->capture_default_str();
  build->add_option("--attachments", o.attachments,
                    "Manual top attachments TSV");
  build->add_option("-o,--out", o.out, "Taxonomy JSON output");

  CLI::App *stats = app.add_subcommand("stats", "Taxonomy level statistics");
  stats->add_option("--taxonomy", o.taxonomy, "Taxonomy JSON")->required();
  stats->add_option("--dictionary", o.dictionary,
                    "Dictionary for headword lookup");
  stats->add_option("--skip-list", o.skip_list, "Genus skip patterns");
  stats->add_option("-o,--out", o.out, "Statistics TSV output");

  CLI::App *eval = app.add_subcommand("eval", "Score labels against gold");
  dictionary(eval);
  eval->add_option("--labels", o.labels, "Labelled corpus")->required();
  eval->add_option("--gold", o.gold, "Gold TSV: sense_id, tag")->required();
  eval->add_option("-o,--out", o.out, "Evaluation JSON output");

  CLI::App *exporter = app.add_subcommand("export", "Render a taxonomy");
  exporter->add_option("--taxonomy", o.taxonomy, "Taxonomy JSON")->required();
  exporter->add_option("--format", o.format, "json, dot or text")
      ->capture_default_str();
  exporter->add_option("-o,--out", o.out, "Output file (default stdout)");

  CLI::App *run = app.add_subcommand(
      "run",
      "Run the full pipeline. Settings come from --config; every --<key> "
      "flag overrides the config key of the same name.");
  run->add_option("--config", o.config, "key = value config file");
  for (const std::string &key : ConfigKeys()) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    run->add_option_function<std::string>(
        flag, [&o, key](const std::string &v) { o.overrides[key] = v; },
        "Overrides config key " + key);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::kUsage);
  }
  if (o.threads != 0) SetThreadCount(o.threads);

  try {
    if (*ingest) RunIngest(o);
    if (*first) RunFirstPassCommand(o);
    if (*train) RunTrain(o);
    if (*label) RunLabel(o);
    if (*iterate) RunIterate(o);
    if (*select) RunSelectGenus(o);
    if (*build) RunBuildTax(o);
    if (*stats) RunStats(o);
    if (*eval) RunEval(o);
    if (*exporter) RunExport(o);
    if (*run) RunAll(o);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return static_cast<int>(ErrorKind::kInvariant);
  }
  return 0;
}

}  // namespace
}  // namespace lextax

int main(int argc, char **argv) { return lextax::Main(argc, argv); }
