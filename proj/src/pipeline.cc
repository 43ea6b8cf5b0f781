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

#include "lextax/pipeline.h"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <memory>
#include <set>

#include "json.hpp"
#include "lextax/errors.h"
#include "lextax/text.h"

namespace lextax {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

int ParseInt(std::string_view key, std::string_view value) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw UsageError("config key " + std::string(key) +
                     ": expected an integer, got \"" + std::string(value) +
                     "\"");
  }
  return out;
}

bool ParseBool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  throw UsageError("config key " + std::string(key) +
                   ": expected true or false, got \"" + std::string(value) +
                   "\"");
}

fs::path ResolvePath(std::string_view value, const fs::path &base) {
  fs::path p{std::string(value)};
  if (p.is_relative() && !base.empty()) p = base / p;
  return p.lexically_normal();
}

// Rethrows the active exception with `stage` prefixed, keeping its kind.
[[noreturn]] void RethrowInStage(const std::string &stage) {
  try {
    throw;
  } catch (const Error &e) {
    std::string message = stage + ": " + e.what();
    switch (e.kind()) {
      case ErrorKind::kUsage:
        throw UsageError(message);
      case ErrorKind::kData:
        throw DataError(message);
      case ErrorKind::kInvariant:
        throw InvariantError(message);
    }
    throw InvariantError(message);
  } catch (const std::exception &e) {
    throw InvariantError(stage + ": " + e.what());
  }
}

}  // namespace

const std::vector<std::string> &ConfigKeys() {
  static const std::vector<std::string> keys = {
      "dictionary", "net",      "bilingual", "stopwords", "skip_list",
      "gold",       "selection_gold",        "attachments", "class",
      "f1",         "f2",       "f3",        "sweep",     "rounds",
      "strategy",   "output"};
  return keys;
}

void SetConfigValue(PipelineConfig &config, std::string_view key,
                    std::string_view value, const fs::path &base) {
  value = Trim(value);
  if (key == "dictionary") {
    config.dictionary = ResolvePath(value, base);
  } else if (key == "net") {
    config.net = ResolvePath(value, base);
  } else if (key == "bilingual") {
    config.bilingual = ResolvePath(value, base);
  } else if (key == "stopwords") {
    config.stopwords = ResolvePath(value, base);
  } else if (key == "skip_list") {
    config.skip_list = ResolvePath(value, base);
  } else if (key == "gold") {
    config.gold = ResolvePath(value, base);
  } else if (key == "selection_gold") {
    config.selection_gold = ResolvePath(value, base);
  } else if (key == "attachments") {
    config.attachments = ResolvePath(value, base);
  } else if (key == "output") {
    config.output = ResolvePath(value, base);
  } else if (key == "class") {
    config.cls = std::string(value);
  } else if (key == "f1") {
    config.filters.f1 = ParseBool(key, value);
  } else if (key == "f2") {
    config.filters.f2 = ParseBool(key, value);
  } else if (key == "f3") {
    config.filters.f3_threshold = ParseInt(key, value);
  } else if (key == "rounds") {
    config.rounds = ParseInt(key, value);
  } else if (key == "strategy") {
    config.strategy = ParseGenusStrategy(value);
  } else if (key == "sweep") {
    config.sweep.clear();
    for (const std::string &part : Split(value, ',')) {
      std::string_view t = Trim(part);
      if (!t.empty()) config.sweep.push_back(ParseInt(key, t));
    }
  } else {
    throw UsageError("unknown config key \"" + std::string(key) + "\"");
  }
}

PipelineConfig ParseConfig(std::istream &in, const fs::path &base) {
  PipelineConfig config;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#') continue;
    size_t eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(line_number) +
                       ": expected key = value");
    }
    try {
      SetConfigValue(config, Trim(text.substr(0, eq)), text.substr(eq + 1),
                     base);
    } catch (const UsageError &e) {
      throw UsageError("config line " + std::to_string(line_number) + ": " +
                       e.what());
    }
  }
  return config;
}

PipelineConfig LoadConfig(const fs::path &path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config " + path.string());
  return ParseConfig(in, path.parent_path());
}

void ValidateConfig(const PipelineConfig &config) {
  auto require = [](const fs::path &p, const char *key) {
    if (p.empty()) throw UsageError(std::string("config key ") + key + " is required");
  };
  require(config.dictionary, "dictionary");
  require(config.net, "net");
  require(config.bilingual, "bilingual");
  require(config.stopwords, "stopwords");
  require(config.output, "output");
  if (config.cls.empty()) throw UsageError("config key class is required");
  if (config.filters.f3_threshold < 0) throw UsageError("f3 must be >= 0");
  if (config.rounds < 0) throw UsageError("rounds must be >= 0");
  for (int t : config.sweep) {
    if (t < 0) throw UsageError("sweep thresholds must be >= 0");
  }
}

std::ifstream OpenInput(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

namespace {

template <typename Fn>
auto ParseFile(const fs::path &path, Fn parse) {
  std::ifstream in = OpenInput(path);
  try {
    return parse(in);
  } catch (const DataError &e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

}  // namespace

GenusSkipList LoadSkipList(const std::optional<fs::path> &path) {
  if (!path) return GenusSkipList::SpanishDefault();
  return ParseFile(*path, [](std::istream &in) { return GenusSkipList::Parse(in); });
}

Dictionary LoadDictionary(const fs::path &path, const GenusSkipList &skip) {
  return ParseFile(path, [&](std::istream &in) { return ParseSenseFile(in, skip); });
}

SemanticNet LoadSemanticNet(const fs::path &path) {
  return ParseFile(path, [](std::istream &in) { return ParseSemanticNet(in); });
}

BilingualMap LoadBilingual(const fs::path &path) {
  return ParseFile(path, [](std::istream &in) { return ParseBilingual(in); });
}

StopwordList LoadStopwords(const fs::path &path) {
  return ParseFile(path, [](std::istream &in) { return StopwordList::Parse(in); });
}

LabelledCorpus LoadLabels(const fs::path &path) {
  return ParseFile(path, [](std::istream &in) { return ParseLabelledCorpus(in); });
}

SalienceTable LoadSalience(const fs::path &path) {
  return ParseFile(path, [](std::istream &in) { return ParseSalienceTable(in); });
}

GenusSelection LoadSelection(const fs::path &path) {
  return ParseFile(path, [](std::istream &in) { return ParseSelection(in); });
}

Taxonomy LoadTaxonomy(const fs::path &path) {
  return ParseFile(path, [](std::istream &in) { return ParseTaxonomyJson(in); });
}

void WriteFileAtomically(const fs::path &path,
                         const std::function<void(std::ostream &)> &writer) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp.string());
    writer(out);
    out.flush();
    if (!out) throw DataError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw DataError("cannot rename " + tmp.string() + ": " + ec.message());
  }
}

std::string Sha256File(const fs::path &path) {
  std::ifstream in = OpenInput(path);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                             EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw InvariantError("sha256 initialisation failed");
  }
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    if (in.gcount() > 0) {
      EVP_DigestUpdate(ctx.get(), buf, static_cast<size_t>(in.gcount()));
    }
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &size);
  static const char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < size; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

void WriteCoverageJson(const CoverageReport &report, std::ostream &out) {
  json obj;
  for (const auto &[name, value] : report.Counters()) obj[name] = value;
  obj["bilingual_polysemy"] = report.bilingual_polysemy;
  obj["net_polysemy"] = report.net_polysemy;
  out << obj.dump(2) << '\n';
}

CoverageReport ParseCoverageJson(std::istream &in) {
  CoverageReport r;
  try {
    json obj = json::parse(in);
    r.definitions = obj.at("noun_definitions").get<int64_t>();
    r.definitions_with_genus = obj.at("noun_definitions_with_genus").get<int64_t>();
    r.genus_terms = obj.at("genus_terms").get<int64_t>();
    r.genus_terms_with_bilingual = obj.at("genus_terms_with_bilingual").get<int64_t>();
    r.genus_terms_with_net = obj.at("genus_terms_with_net").get<int64_t>();
    r.headwords = obj.at("headwords").get<int64_t>();
    r.headwords_with_bilingual = obj.at("headwords_with_bilingual").get<int64_t>();
    r.headwords_with_net = obj.at("headwords_with_net").get<int64_t>();
    r.definitions_with_bilingual = obj.at("definitions_with_bilingual").get<int64_t>();
    r.definitions_with_net = obj.at("definitions_with_net").get<int64_t>();
    r.definitions_labelled = obj.at("definitions_labelled").get<int64_t>();
    r.bilingual_polysemy = obj.at("bilingual_polysemy").get<double>();
    r.net_polysemy = obj.at("net_polysemy").get<double>();
  } catch (const json::exception &e) {
    throw DataError(std::string("malformed coverage report: ") + e.what());
  }
  return r;
}

void WriteHistogramTsv(const std::vector<HistogramRow> &histogram,
                       std::ostream &out) {
  int64_t total = 0;
  for (const HistogramRow &r : histogram) total += r.senses;
  out << "# class\tcount\tpercent\n";
  for (const HistogramRow &r : histogram) {
    out << r.cls << '\t' << r.senses << '\t'
        << FormatPercent(static_cast<double>(r.senses),
                         static_cast<double>(total), 1)
        << '\n';
  }
}

std::vector<HistogramRow> ParseHistogramTsv(std::istream &in) {
  std::vector<HistogramRow> rows;
  ForEachTsvLine(in, [&](int line, const std::vector<std::string> &fields) {
    if (fields.size() != 3) throw DataError(line, "expected 3 fields");
    HistogramRow row;
    row.cls = fields[0];
    auto [ptr, ec] = std::from_chars(fields[1].data(),
                                     fields[1].data() + fields[1].size(),
                                     row.senses);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size()) {
      throw DataError(line, "bad count \"" + fields[1] + "\"");
    }
    rows.push_back(std::move(row));
  });
  return rows;
}

void WriteStatsTsv(const TaxonomyStats &stats, std::ostream &out) {
  out << "# statistic\tvalue\n";
  out << "genus_terms\t" << stats.genus_terms << '\n';
  out << "senses\t" << stats.senses << '\n';
  out << "tops\t" << stats.tops << '\n';
  out << "levels\t" << stats.levels << '\n';
  for (size_t i = 0; i < stats.per_level.size(); ++i) {
    out << "level_" << i + 1 << '\t' << stats.per_level[i] << '\n';
  }
}

TaxonomyStats ParseStatsTsv(std::istream &in) {
  TaxonomyStats stats;
  std::map<int, int64_t> levels;
  ForEachTsvLine(in, [&](int line, const std::vector<std::string> &fields) {
    if (fields.size() != 2) throw DataError(line, "expected 2 fields");
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(fields[1].data(),
                                     fields[1].data() + fields[1].size(), value);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size()) {
      throw DataError(line, "bad value \"" + fields[1] + "\"");
    }
    const std::string &name = fields[0];
    if (name == "genus_terms") {
      stats.genus_terms = value;
    } else if (name == "senses") {
      stats.senses = value;
    } else if (name == "tops") {
      stats.tops = value;
    } else if (name == "levels") {
      stats.levels = static_cast<int>(value);
    } else if (name.rfind("level_", 0) == 0) {
      levels[std::stoi(name.substr(6))] = value;
    } else {
      throw DataError(line, "unknown statistic \"" + name + "\"");
    }
  });
  for (const auto &[level, count] : levels) {
    if (level != static_cast<int>(stats.per_level.size()) + 1) {
      throw DataError("level statistics are not consecutive");
    }
    stats.per_level.push_back(count);
  }
  return stats;
}

void WriteRoundsTsv(const std::vector<LabellingRound> &rounds,
                    std::ostream &out) {
  out << "# round\tpass\tlabelled\tdefinitions\tcoverage\tties\tchanged\t"
         "fixpoint\n";
  for (const LabellingRound &r : rounds) {
    out << r.round << '\t' << PassName(r.round) << '\t' << r.labels.size()
        << '\t' << r.definitions << '\t'
        << FormatPercent(static_cast<double>(r.labels.size()),
                         static_cast<double>(r.definitions), 1)
        << '\t' << r.ties << '\t' << r.changed << '\t'
        << (r.fixpoint ? "yes" : "no") << '\n';
  }
}

std::map<std::string, std::string> ParseGoldLabels(std::istream &in) {
  std::map<std::string, std::string> gold;
  ForEachTsvLine(in, [&](int line, const std::vector<std::string> &fields) {
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw DataError(line, "expected sense_id and tag");
    }
    if (!gold.emplace(fields[0], fields[1]).second) {
      throw DataError(line, "sense " + fields[0] + " listed twice");
    }
  });
  return gold;
}

Evaluation EvaluateLabels(const LabelledCorpus &labels,
                          const std::map<std::string, std::string> &gold,
                          const Dictionary &dict) {
  if (gold.empty()) throw DataError("empty gold file");
  Evaluation e;
  for (const Sense &s : dict.senses()) {
    if (s.pos == kNounPos) ++e.definitions;
  }
  std::map<std::string_view, std::string_view> predicted;
  for (const LabelledSense &l : labels) predicted[l.sense_id] = l.tag;
  e.labelled = static_cast<int64_t>(labels.size());
  e.gold = static_cast<int64_t>(gold.size());
  for (const auto &[id, tag] : gold) {
    if (dict.Find(id) == nullptr) {
      e.unknown.push_back(id);
      continue;
    }
    auto it = predicted.find(id);
    if (it == predicted.end()) continue;
    ++e.evaluated;
    if (it->second == tag) ++e.correct;
    ++e.confusion[tag][std::string(it->second)];
  }
  if (e.evaluated == 0) throw DataError("no evaluable senses");
  e.accuracy = static_cast<double>(e.correct) / static_cast<double>(e.evaluated);
  if (e.definitions > 0) {
    e.coverage = static_cast<double>(e.labelled) / static_cast<double>(e.definitions);
  }
  return e;
}

void WriteEvaluationJson(const Evaluation &e, std::ostream &out) {
  json obj;
  obj["definitions"] = e.definitions;
  obj["labelled"] = e.labelled;
  obj["gold"] = e.gold;
  obj["evaluated"] = e.evaluated;
  obj["correct"] = e.correct;
  obj["accuracy"] = e.accuracy;
  obj["coverage"] = e.coverage;
  obj["unknown"] = e.unknown;
  json confusion = json::object();
  for (const auto &[gold_tag, row] : e.confusion) {
    json r = json::object();
    for (const auto &[tag, n] : row) r[tag] = n;
    confusion[gold_tag] = std::move(r);
  }
  obj["confusion"] = std::move(confusion);
  out << obj.dump(2) << '\n';
}

void WriteManifest(const Manifest &manifest, std::ostream &out) {
  json obj;
  obj["status"] = manifest.failed_stage ? "failed" : "ok";
  if (manifest.failed_stage) {
    obj["failed_stage"] = *manifest.failed_stage;
    obj["error"] = manifest.error.value_or("");
  }
  obj["artifacts"] = json::array();
  for (const ManifestEntry &a : manifest.artifacts) {
    obj["artifacts"].push_back(
        {{"file", a.file}, {"stage", a.stage}, {"sha256", a.sha256}});
  }
  out << obj.dump(2) << '\n';
}

Manifest ParseManifest(std::istream &in) {
  Manifest m;
  try {
    json obj = json::parse(in);
    std::string status = obj.at("status").get<std::string>();
    if (status == "failed") {
      m.failed_stage = obj.at("failed_stage").get<std::string>();
      m.error = obj.at("error").get<std::string>();
    } else if (status != "ok") {
      throw DataError("unknown manifest status \"" + status + "\"");
    }
    for (const json &a : obj.at("artifacts")) {
      m.artifacts.push_back({a.at("file").get<std::string>(),
                             a.at("stage").get<std::string>(),
                             a.at("sha256").get<std::string>()});
    }
  } catch (const json::exception &e) {
    throw DataError(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

namespace {

class Run {
 public:
  Run(const PipelineConfig &config, std::ostream *log)
      : config_(config), log_(log) {}

  Manifest &manifest() { return manifest_; }

  // Runs `fn` as stage `name`; failures are recorded and rethrown with the
  // stage name.
  template <typename Fn>
  void Stage(const std::string &name, Fn fn) {
    try {
      fn();
    } catch (...) {
      manifest_.failed_stage = name;
      try {
        RethrowInStage(name);
      } catch (const std::exception &e) {
        manifest_.error = e.what();
        WriteManifestFile();
        throw;
      }
    }
    if (log_ != nullptr) *log_ << "[" << name << "] done\n";
  }

  void Emit(const std::string &stage, const std::string &file,
            const std::function<void(std::ostream &)> &writer) {
    fs::path path = config_.output / file;
    WriteFileAtomically(path, writer);
    manifest_.artifacts.push_back({file, stage, Sha256File(path)});
  }

  void WriteManifestFile() {
    WriteFileAtomically(config_.output / "manifest.json",
                        [&](std::ostream &out) { WriteManifest(manifest_, out); });
  }

 private:
  const PipelineConfig &config_;
  std::ostream *log_;
  Manifest manifest_;
};

}  // namespace

Manifest RunPipeline(const PipelineConfig &config, Execution execution,
                     std::ostream *log) {
  ValidateConfig(config);
  fs::create_directories(config.output);
  Run run(config, log);

  Dictionary dict;
  SemanticNet net;
  BilingualMap bilingual;
  StopwordList stopwords;
  run.Stage("ingest", [&] {
    dict = LoadDictionary(config.dictionary, LoadSkipList(config.skip_list));
    net = LoadSemanticNet(config.net);
    bilingual = LoadBilingual(config.bilingual);
    stopwords = LoadStopwords(config.stopwords);
    run.Emit("ingest", "dictionary.jsonl",
             [&](std::ostream &out) { WriteSenseFile(dict, out); });
  });

  FirstPassResult first;
  run.Stage("first-pass", [&] {
    first = RunFirstPass(dict, net, bilingual, execution);
    run.Emit("first-pass", "first_pass.jsonl",
             [&](std::ostream &out) { WriteLabelledCorpus(first.labels, out); });
    run.Emit("first-pass", "coverage.json",
             [&](std::ostream &out) { WriteCoverageJson(first.report, out); });
  });

  std::vector<LabellingRound> rounds;
  run.Stage("train", [&] {
    rounds = IterateFrom(dict, first, stopwords, config.rounds + 1, execution);
    run.Emit("train", "salience.tsv", [&](std::ostream &out) {
      WriteSalienceTable(*rounds.back().table, out);
    });
  });

  const LabellingRound &last = rounds.back();
  run.Stage("label", [&] {
    run.Emit("label", "labels.jsonl",
             [&](std::ostream &out) { WriteLabelledCorpus(last.labels, out); });
    run.Emit("label", "histogram.tsv",
             [&](std::ostream &out) { WriteHistogramTsv(last.histogram, out); });
  });

  GenusSelection selection;
  run.Stage("select-genus", [&] {
    GenusFrequencyTable table = GenusFrequencyTable::Build(
        last.labels, dict, {config.cls});
    selection = ApplyFilters(table, config.cls, bilingual, net, config.filters);
    run.Emit("select-genus", "selection.json",
             [&](std::ostream &out) { WriteSelection(selection, out); });
    if (!config.sweep.empty()) {
      std::optional<SelectionGold> gold;
      if (config.selection_gold) {
        gold = ParseFile(*config.selection_gold,
                         [](std::istream &in) { return ParseSelectionGold(in); });
      }
      SelectionReport report = BuildSelectionReport(
          table, config.cls, bilingual, net, config.sweep, gold ? &*gold : nullptr);
      run.Emit("select-genus", "sweep.tsv", [&](std::ostream &out) {
        WriteSelectionReportTsv(report, out);
      });
    }
  });

  Taxonomy taxonomy;
  run.Stage("build-tax", [&] {
    GenusDisambiguator disambiguator(dict, net, bilingual, config.strategy);
    PairCollection pairs =
        CollectPairs(last.labels, selection, dict, disambiguator, execution);
    taxonomy = BuildTaxonomy(pairs.pairs, config.cls);
    if (config.attachments) {
      auto attachments = ParseFile(
          *config.attachments, [](std::istream &in) { return ParseAttachments(in); });
      ApplyAttachments(taxonomy, attachments);
    }
    CheckTaxonomy(taxonomy);
    run.Emit("build-tax", "taxonomy.json", [&](std::ostream &out) {
      ExportTaxonomy(taxonomy, ExportFormat::kJson, out);
    });
  });

  run.Stage("stats", [&] {
    TaxonomyStats stats = ComputeStats(taxonomy, &dict);
    run.Emit("stats", "stats.tsv",
             [&](std::ostream &out) { WriteStatsTsv(stats, out); });
  });

  if (config.gold) {
    run.Stage("eval", [&] {
      auto gold = ParseFile(*config.gold,
                            [](std::istream &in) { return ParseGoldLabels(in); });
      Evaluation evaluation = EvaluateLabels(last.labels, gold, dict);
      run.Emit("eval", "evaluation.json", [&](std::ostream &out) {
        WriteEvaluationJson(evaluation, out);
      });
    });
  }

  run.WriteManifestFile();
  return run.manifest();
}

}  // namespace lextax
