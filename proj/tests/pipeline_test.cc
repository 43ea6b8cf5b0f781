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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <sstream>

#include "lextax/errors.h"
#include "fixture_checks.h"
#include "test_util.h"

namespace lextax {
namespace {

namespace fs = std::filesystem;
using testing::ReadFile;

const std::vector<std::string> &kArtifacts = testing::FixtureArtifacts();

PipelineConfig FixtureConfig(const fs::path &output) {
  PipelineConfig config = LoadConfig(testing::FixtureDir() / "pipeline.conf");
  config.output = output;
  return config;
}

std::vector<std::string> Hashes(const Manifest &m) {
  std::vector<std::string> out;
  for (const ManifestEntry &e : m.artifacts) {
    out.push_back(e.file + " " + e.stage + " " + e.sha256);
  }
  return out;
}

int RunCli(const std::string &args) {
  std::string command = "'" + testing::CliPath().string() + "' -q " + args +
                        " >/dev/null 2>&1";
  int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Quote(const fs::path &p) { return "'" + p.string() + "'"; }

TEST(ConfigTest, ParsesKeysAndResolvesPaths) {
  std::istringstream in(
      "# comment\n"
      "dictionary = d.jsonl\n"
      "net = /abs/net.tsv\n"
      "class = 13 food\n"
      "f1 = true\n"
      "f2 = false\n"
      "f3 = 9\n"
      "sweep = 1,2,3\n"
      "rounds = 2\n"
      "strategy = conceptual-distance\n");
  PipelineConfig c = ParseConfig(in, "/base");
  EXPECT_EQ(c.dictionary, fs::path("/base/d.jsonl"));
  EXPECT_EQ(c.net, fs::path("/abs/net.tsv"));
  EXPECT_EQ(c.cls, "13 food");
  EXPECT_TRUE(c.filters.f1);
  EXPECT_FALSE(c.filters.f2);
  EXPECT_EQ(c.filters.f3_threshold, 9);
  EXPECT_EQ(c.sweep, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(c.rounds, 2);
  EXPECT_EQ(c.strategy, GenusStrategy::kConceptualDistance);
}

TEST(ConfigTest, RejectsBadInput) {
  PipelineConfig c;
  EXPECT_THROW(SetConfigValue(c, "colour", "red"), UsageError);
  EXPECT_THROW(SetConfigValue(c, "f3", "nine"), UsageError);
  EXPECT_THROW(SetConfigValue(c, "f1", "maybe"), UsageError);
  EXPECT_THROW(SetConfigValue(c, "strategy", "guess"), UsageError);
  std::istringstream no_equals("dictionary d.jsonl\n");
  EXPECT_THROW(ParseConfig(no_equals), UsageError);

  PipelineConfig valid = FixtureConfig(testing::ScratchDir("validate"));
  EXPECT_NO_THROW(ValidateConfig(valid));
  PipelineConfig negative = valid;
  negative.filters.f3_threshold = -1;
  EXPECT_THROW(ValidateConfig(negative), UsageError);
  negative = valid;
  negative.rounds = -2;
  EXPECT_THROW(ValidateConfig(negative), UsageError);
  PipelineConfig no_class = valid;
  no_class.cls.clear();
  EXPECT_THROW(ValidateConfig(no_class), UsageError);
}

TEST(RunPipelineTest, FixtureMatchesGoldens) {
  fs::path out = testing::ScratchDir("golden");
  Manifest m = RunPipeline(FixtureConfig(out));
  EXPECT_FALSE(m.failed_stage);
  ASSERT_EQ(m.artifacts.size(), kArtifacts.size());
  const fs::path golden = testing::GoldenDir() / "fixture";
  for (size_t i = 0; i < kArtifacts.size(); ++i) {
    EXPECT_EQ(m.artifacts[i].file, kArtifacts[i]);
    EXPECT_EQ(ReadFile(out / kArtifacts[i]), ReadFile(golden / kArtifacts[i]))
        << kArtifacts[i];
    EXPECT_EQ(m.artifacts[i].sha256, Sha256File(golden / kArtifacts[i]));
  }
  EXPECT_EQ(ReadFile(out / "manifest.json"),
            ReadFile(golden / "manifest.json"));
}

TEST(RunPipelineTest, ExportsMatchGoldens) {
  Taxonomy t = LoadTaxonomy(testing::GoldenDir() / "fixture" / "taxonomy.json");
  const fs::path golden = testing::GoldenDir() / "fixture";
  for (auto [format, file] : {std::pair{ExportFormat::kDot, "taxonomy.dot"},
                              std::pair{ExportFormat::kText, "taxonomy.txt"},
                              std::pair{ExportFormat::kJson, "taxonomy.json"}}) {
    std::ostringstream out;
    ExportTaxonomy(t, format, out);
    EXPECT_EQ(out.str(), ReadFile(golden / file)) << file;
  }
}

TEST(RunPipelineTest, DeterministicAcrossThreadCounts) {
  fs::path base_dir = testing::ScratchDir("serial");
  Manifest base = RunPipeline(FixtureConfig(base_dir), Execution::kSerial);
  for (int threads : {1, 2, 4}) {
    SetThreadCount(threads);
    fs::path dir = testing::ScratchDir("threads" + std::to_string(threads));
    Manifest m = RunPipeline(FixtureConfig(dir), Execution::kParallel);
    EXPECT_EQ(Hashes(m), Hashes(base)) << threads;
    EXPECT_EQ(ReadFile(dir / "manifest.json"),
              ReadFile(base_dir / "manifest.json"));
  }
  SetThreadCount(0);
}

TEST(RunPipelineTest, ArtifactsReparse) {
  const fs::path g = testing::GoldenDir() / "fixture";
  EXPECT_NO_THROW(LoadDictionary(g / "dictionary.jsonl",
                                 GenusSkipList::SpanishDefault()));
  EXPECT_FALSE(LoadLabels(g / "first_pass.jsonl").empty());
  EXPECT_FALSE(LoadLabels(g / "labels.jsonl").empty());
  EXPECT_GT(LoadSalience(g / "salience.tsv").size(), 0u);
  EXPECT_FALSE(LoadSelection(g / "selection.json").selected.empty());
  EXPECT_NO_THROW(CheckTaxonomy(LoadTaxonomy(g / "taxonomy.json")));
  std::ifstream coverage(g / "coverage.json");
  EXPECT_GT(ParseCoverageJson(coverage).definitions, 0);
  std::ifstream histogram(g / "histogram.tsv");
  EXPECT_EQ(ParseHistogramTsv(histogram).size(), 3u);
  std::ifstream stats(g / "stats.tsv");
  EXPECT_EQ(ParseStatsTsv(stats).senses, 18);
  std::ifstream manifest(g / "manifest.json");
  EXPECT_EQ(ParseManifest(manifest).artifacts.size(), 9u);
}

TEST(RunPipelineTest, MissingDictionaryAbortsAtIngest) {
  fs::path out = testing::ScratchDir("missing");
  PipelineConfig config = FixtureConfig(out);
  config.dictionary = "/nonexistent/senses.jsonl";
  try {
    RunPipeline(config);
    FAIL() << "expected DataError";
  } catch (const DataError &e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/senses.jsonl"),
              std::string::npos);
    EXPECT_NE(std::string(e.what()).find("ingest"), std::string::npos);
  }
  std::ifstream in(out / "manifest.json");
  Manifest m = ParseManifest(in);
  EXPECT_EQ(m.failed_stage, "ingest");
  EXPECT_TRUE(m.artifacts.empty());
}

TEST(RunPipelineTest, GoldAndSweepAddArtifacts) {
  fs::path out = testing::ScratchDir("extras");
  PipelineConfig config = FixtureConfig(out);
  config.gold = testing::FixtureDir() / "gold.tsv";
  config.sweep = {1, 2, 3};
  config.selection_gold = testing::FixtureDir() / "selection_gold.tsv";
  Manifest m = RunPipeline(config);
  EXPECT_EQ(m.artifacts.size(), 11u);
  EXPECT_TRUE(fs::exists(out / "evaluation.json"));
  EXPECT_TRUE(fs::exists(out / "sweep.tsv"));
  // Extra artifacts leave the core ones untouched.
  for (const std::string &file : kArtifacts) {
    EXPECT_EQ(ReadFile(out / file),
              ReadFile(testing::GoldenDir() / "fixture" / file));
  }
}

class CliTest : public ::testing::Test {
 protected:
  std::string Dict(const fs::path &dir) {
    return "--dictionary " + Quote(dir / "dictionary.jsonl");
  }
  std::string Resources() {
    return "--net " + Quote(fixture_ / "net.tsv") + " --bilingual " +
           Quote(fixture_ / "bilingual.tsv");
  }
  fs::path fixture_ = testing::FixtureDir();
};

TEST_F(CliTest, StagesInIsolationMatchFullRun) {
  fs::path d = testing::ScratchDir("stages");
  std::string stop = " --stopwords " + Quote(fixture_ / "stopwords.txt");
  ASSERT_EQ(RunCli("ingest --dictionary " + Quote(fixture_ / "senses.jsonl") +
                   " " + Resources() + " -o " + Quote(d / "dictionary.jsonl")),
            0);
  ASSERT_EQ(RunCli("first-pass " + Dict(d) + " " + Resources() + " -o " +
                   Quote(d / "first_pass.jsonl") + " --coverage " +
                   Quote(d / "coverage.json")),
            0);
  ASSERT_EQ(RunCli("train " + Dict(d) + " --labels " +
                   Quote(d / "first_pass.jsonl") + stop + " -o " +
                   Quote(d / "salience.tsv")),
            0);
  ASSERT_EQ(RunCli("label " + Dict(d) + " --salience " +
                   Quote(d / "salience.tsv") + stop + " -o " +
                   Quote(d / "labels.jsonl") + " --histogram " +
                   Quote(d / "histogram.tsv")),
            0);
  ASSERT_EQ(RunCli("select-genus " + Dict(d) + " " + Resources() +
                   " --labels " + Quote(d / "labels.jsonl") +
                   " --class '13 food' --f2 --f3 1 -o " +
                   Quote(d / "selection.json")),
            0);
  ASSERT_EQ(RunCli("build-tax " + Dict(d) + " " + Resources() + " --labels " +
                   Quote(d / "labels.jsonl") + " --selection " +
                   Quote(d / "selection.json") +
                   " --strategy first-sense -o " + Quote(d / "taxonomy.json")),
            0);
  ASSERT_EQ(RunCli("stats --taxonomy " + Quote(d / "taxonomy.json") + " " +
                   Dict(d) + " -o " + Quote(d / "stats.tsv")),
            0);
  for (const std::string &file : kArtifacts) {
    EXPECT_EQ(ReadFile(d / file),
              ReadFile(testing::GoldenDir() / "fixture" / file))
        << file;
  }
  ASSERT_EQ(RunCli("export --taxonomy " + Quote(d / "taxonomy.json") +
                   " --format dot -o " + Quote(d / "taxonomy.dot")),
            0);
  EXPECT_EQ(ReadFile(d / "taxonomy.dot"),
            ReadFile(testing::GoldenDir() / "fixture" / "taxonomy.dot"));
}

TEST_F(CliTest, RunSubcommandWithOverrides) {
  fs::path d = testing::ScratchDir("cli_run");
  ASSERT_EQ(RunCli("--threads 2 run --config " +
                   Quote(fixture_ / "pipeline.conf") + " --output " +
                   Quote(d)),
            0);
  EXPECT_EQ(ReadFile(d / "manifest.json"),
            ReadFile(testing::GoldenDir() / "fixture" / "manifest.json"));
}

TEST_F(CliTest, ExitCodes) {
  fs::path d = testing::ScratchDir("exit_codes");
  EXPECT_EQ(RunCli(""), 1);
  EXPECT_EQ(RunCli("frobnicate"), 1);
  EXPECT_EQ(RunCli("run --config " + Quote(fixture_ / "pipeline.conf") +
                   " --f3 -4 --output " + Quote(d)),
            1);
  EXPECT_EQ(RunCli("export --taxonomy " +
                   Quote(testing::GoldenDir() / "fixture" / "taxonomy.json") +
                   " --format xml"),
            1);
  EXPECT_EQ(RunCli("run --config " + Quote(fixture_ / "pipeline.conf") +
                   " --dictionary /nonexistent.jsonl --output " + Quote(d)),
            2);
  EXPECT_EQ(RunCli("export --taxonomy " + Quote(fixture_ / "net.tsv")), 2);
  EXPECT_EQ(RunCli("export --taxonomy " +
                   Quote(testing::GoldenDir() / "fixture" / "taxonomy.json") +
                   " -o " + Quote(d / "t.txt") + " --format text"),
            0);
}

TEST(EvaluateLabelsTest, Arithmetic) {
  Dictionary dict = Dictionary::FromSenses(
      {testing::MakeSense("a_1", "a", {"x"}, "x"),
       testing::MakeSense("b_1", "b", {"x"}, "x"),
       testing::MakeSense("c_1", "c", {"x"}, "x"),
       testing::MakeSense("d_1", "d", {"x"}, "x"),
       testing::MakeSense("e_1", "e", {"x"}, "x")});
  LabelledCorpus labels = {
      testing::MakeLabel("a_1", "P"), testing::MakeLabel("b_1", "P"),
      testing::MakeLabel("c_1", "Q"), testing::MakeLabel("d_1", "Q")};
  std::map<std::string, std::string> gold = {
      {"a_1", "P"}, {"b_1", "P"}, {"c_1", "Q"}, {"d_1", "P"}, {"zz_1", "P"}};
  Evaluation e = EvaluateLabels(labels, gold, dict);
  EXPECT_EQ(e.evaluated, 4);
  EXPECT_EQ(e.correct, 3);
  EXPECT_DOUBLE_EQ(e.accuracy, 0.75);
  EXPECT_DOUBLE_EQ(e.coverage, 0.8);
  EXPECT_EQ(e.unknown, std::vector<std::string>{"zz_1"});
  EXPECT_EQ(e.confusion["P"]["Q"], 1);
  EXPECT_THROW(EvaluateLabels(labels, {{"e_1", "P"}}, dict), DataError);
}

TEST(EvaluateLabelsTest, FixtureConfusionMatchesHandCount) {
  testing::Fixture f = testing::LoadFixture();
  LabelledCorpus labels =
      LoadLabels(testing::GoldenDir() / "fixture" / "labels.jsonl");
  std::ifstream in(testing::FixtureDir() / "gold.tsv");
  Evaluation e = EvaluateLabels(labels, ParseGoldLabels(in), f.dict);
  EXPECT_EQ(e.gold, 11);
  EXPECT_EQ(e.evaluated, 10);
  EXPECT_EQ(e.correct, 8);
  EXPECT_DOUBLE_EQ(e.accuracy, 0.8);
  EXPECT_EQ(e.unknown, std::vector<std::string>{"unicornio_1_1"});
  using Row = std::map<std::string, int64_t>;
  EXPECT_EQ(e.confusion,
            (std::map<std::string, Row>{
                {"05 animal", Row{{"05 animal", 2}}},
                {"06 artifact", Row{{"06 artifact", 3}}},
                {"13 food", Row{{"05 animal", 2}, {"13 food", 3}}}}));
}

TEST(EndToEndOracleTest, EveryStageMatches) {
  fs::path out = testing::ScratchDir("oracle");
  RunPipeline(FixtureConfig(out));
  for (const std::string &m : testing::OracleMismatches(out)) ADD_FAILURE() << m;
  EXPECT_TRUE(testing::GoldenMismatches(out).empty());
}

TEST(EndToEndOracleTest, DetectsACorruptedArtifact) {
  fs::path out = testing::ScratchDir("corrupt");
  RunPipeline(FixtureConfig(out));
  Taxonomy t = LoadTaxonomy(out / "taxonomy.json");
  std::string leaf;
  for (const auto &[id, node] : t.nodes) {
    if (node.children.empty() && node.level > 1) leaf = id;
  }
  ASSERT_FALSE(leaf.empty());
  t.nodes.at(*t.nodes.at(leaf).hypernym).children.erase(leaf);
  t.nodes.erase(leaf);
  WriteFileAtomically(out / "taxonomy.json", [&](std::ostream &o) {
    ExportTaxonomy(t, ExportFormat::kJson, o);
  });
  EXPECT_FALSE(testing::OracleMismatches(out).empty());
  EXPECT_EQ(testing::GoldenMismatches(out),
            std::vector<std::string>{"taxonomy.json"});
}

}  // namespace
}  // namespace lextax
