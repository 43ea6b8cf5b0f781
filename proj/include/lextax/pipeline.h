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

// End-to-end orchestration: configuration, per-stage artifact writers and
// readers, the full run with its manifest, and label evaluation.
//
// Artifacts of a run, in stage order:
//
//   ingest        dictionary.jsonl
//   first-pass    first_pass.jsonl, coverage.json
//   train         salience.tsv
//   label         labels.jsonl, histogram.tsv
//   select-genus  selection.json
//   build-tax     taxonomy.json
//   stats         stats.tsv
//
// plus evaluation.json when gold labels are configured and sweep.tsv when a
// threshold sweep is. manifest.json lists every artifact with its SHA-256.

#ifndef LEXTAX_PIPELINE_H_
#define LEXTAX_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lextax/genus_selector.h"
#include "lextax/labels.h"
#include "lextax/lexicon.h"
#include "lextax/parallel.h"
#include "lextax/primary_labeller.h"
#include "lextax/salience.h"
#include "lextax/semantic_labeller.h"
#include "lextax/taxonomy.h"

namespace lextax {

struct PipelineConfig {
  std::filesystem::path dictionary;
  std::filesystem::path net;
  std::filesystem::path bilingual;
  std::filesystem::path stopwords;
  std::optional<std::filesystem::path> skip_list;
  std::optional<std::filesystem::path> gold;
  std::optional<std::filesystem::path> selection_gold;
  std::optional<std::filesystem::path> attachments;
  std::string cls;
  FilterConfig filters;
  std::vector<int> sweep;
  int rounds = 0;  // iterations after the second pass
  GenusStrategy strategy = GenusStrategy::kFirstSense;
  std::filesystem::path output;
};

// Keys accepted in config files and as `key=value` overrides.
const std::vector<std::string> &ConfigKeys();

// Sets one key. Relative paths are resolved against `base`. Throws
// UsageError for unknown keys and malformed values.
void SetConfigValue(PipelineConfig &config, std::string_view key,
                    std::string_view value,
                    const std::filesystem::path &base = {});

// Reads `key = value` lines; '#' starts a comment line.
PipelineConfig ParseConfig(std::istream &in,
                           const std::filesystem::path &base = {});

PipelineConfig LoadConfig(const std::filesystem::path &path);

// Checks required keys, ranges and that input files exist.
void ValidateConfig(const PipelineConfig &config);

// Opens a file for reading; DataError naming the path when it cannot be.
std::ifstream OpenInput(const std::filesystem::path &path);

GenusSkipList LoadSkipList(const std::optional<std::filesystem::path> &path);
Dictionary LoadDictionary(const std::filesystem::path &path,
                          const GenusSkipList &skip);
SemanticNet LoadSemanticNet(const std::filesystem::path &path);
BilingualMap LoadBilingual(const std::filesystem::path &path);
StopwordList LoadStopwords(const std::filesystem::path &path);
LabelledCorpus LoadLabels(const std::filesystem::path &path);
SalienceTable LoadSalience(const std::filesystem::path &path);
GenusSelection LoadSelection(const std::filesystem::path &path);
Taxonomy LoadTaxonomy(const std::filesystem::path &path);

// Writes `path` through a temporary sibling renamed into place.
void WriteFileAtomically(const std::filesystem::path &path,
                         const std::function<void(std::ostream &)> &writer);

// Lowercase hex SHA-256 of a file's bytes.
std::string Sha256File(const std::filesystem::path &path);

void WriteCoverageJson(const CoverageReport &report, std::ostream &out);
CoverageReport ParseCoverageJson(std::istream &in);

// "# class\tcount\tpercent" followed by one row per class.
void WriteHistogramTsv(const std::vector<HistogramRow> &histogram,
                       std::ostream &out);
std::vector<HistogramRow> ParseHistogramTsv(std::istream &in);

// "# statistic\tvalue" then genus_terms, senses, tops, levels, level_N.
void WriteStatsTsv(const TaxonomyStats &stats, std::ostream &out);
TaxonomyStats ParseStatsTsv(std::istream &in);

// Per-round summary of an iterated labelling.
void WriteRoundsTsv(const std::vector<LabellingRound> &rounds,
                    std::ostream &out);

// sense id -> expected tag.
std::map<std::string, std::string> ParseGoldLabels(std::istream &in);

struct Evaluation {
  int64_t definitions = 0;  // noun senses in the dictionary
  int64_t labelled = 0;
  int64_t gold = 0;
  int64_t evaluated = 0;  // gold senses that carry a label
  int64_t correct = 0;
  double accuracy = 0.0;
  double coverage = 0.0;
  std::vector<std::string> unknown;  // gold ids missing from the dictionary
  // gold tag -> predicted tag -> count over evaluated senses.
  std::map<std::string, std::map<std::string, int64_t>> confusion;
};

// Throws DataError "no evaluable senses" when no gold sense is labelled.
Evaluation EvaluateLabels(const LabelledCorpus &labels,
                          const std::map<std::string, std::string> &gold,
                          const Dictionary &dict);

void WriteEvaluationJson(const Evaluation &evaluation, std::ostream &out);

struct ManifestEntry {
  std::string file;
  std::string stage;
  std::string sha256;
};

struct Manifest {
  std::vector<ManifestEntry> artifacts;
  std::optional<std::string> failed_stage;
  std::optional<std::string> error;
};

void WriteManifest(const Manifest &manifest, std::ostream &out);
Manifest ParseManifest(std::istream &in);

// Runs every stage, writing artifacts under config.output and the manifest
// last. On failure the manifest records the stage and cause, keeps the
// artifacts written so far, and the error is rethrown with the stage name.
// `log` receives one line per finished stage.
Manifest RunPipeline(const PipelineConfig &config,
                     Execution execution = Execution::kParallel,
                     std::ostream *log = nullptr);

}  // namespace lextax

#endif  // LEXTAX_PIPELINE_H_
