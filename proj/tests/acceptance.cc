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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fixture_checks.h"
#include "graph_oracle.h"
#include "lextax/concept_graph.h"
#include "lextax/genus_selector.h"
#include "lextax/pipeline.h"
#include "lextax/salience.h"
#include "lextax/semantic_labeller.h"
#include "lextax/taxonomy.h"
#include "lextax/text.h"
#include "published_tables.h"
#include "test_util.h"

namespace lextax {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Collects failures of one criterion; `detail` summarizes what was checked.
struct Outcome {
  std::vector<std::string> failures;
  std::string detail;

  void Require(bool ok, const std::string &what) {
    if (!ok) failures.push_back(what);
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Name(size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "n%03zu", i);
  return buf;
}

std::vector<int> RandomSet(std::mt19937_64 &rng, size_t n, size_t max_size) {
  std::set<int> s;
  size_t k = 1 + rng() % max_size;
  while (s.size() < std::min(k, n)) s.insert(static_cast<int>(rng() % n));
  return {s.begin(), s.end()};
}

std::vector<std::string> Names(const std::vector<int> &v) {
  std::vector<std::string> out;
  for (int i : v) out.push_back(Name(static_cast<size_t>(i)));
  return out;
}

Outcome DistanceOracle() {
  Outcome o;
  auto start = Clock::now();
  std::mt19937_64 rng(20260416);
  int queries = 0, connected = 0;
  for (int dag_index = 0; dag_index < 100; ++dag_index) {
    int n = 20 + static_cast<int>(rng() % 181);
    std::vector<std::vector<int>> dag = testing::RandomDag(rng, n, 400);
    size_t edges = 0;
    for (const auto &p : dag) edges += p.size();
    o.Require(dag.size() <= 200 && edges <= 400, "DAG exceeds size limits");
    SemanticNet net = testing::NetFromParents(dag);
    oracle::Graph graph = oracle::MakeGraph(dag);
    for (int q = 0; q < 10; ++q, ++queries) {
      std::vector<int> a = RandomSet(rng, dag.size(), 3);
      std::vector<int> b = RandomSet(rng, dag.size(), 3);
      auto got = ConceptualDistance(net, Names(a), Names(b));
      auto want = oracle::MinDistance(graph, a, b);
      const std::string at = "dag " + std::to_string(dag_index) + " query " +
                             std::to_string(q);
      o.Require(got.has_value() == want.has_value(), at + ": connectivity");
      if (!got || !want) continue;
      ++connected;
      o.Require(std::fabs(got->distance - want->path.cost_double()) <= 1e-9,
                at + ": cost");
      o.Require(got->best_pair.first == Name(want->first) &&
                    got->best_pair.second == Name(want->second),
                at + ": best pair");
      o.Require(got->path.concepts == Names(want->path.nodes), at + ": path");
    }
  }
  double seconds = Seconds(start);
  o.Require(seconds < 60.0, "took " + FormatDouble(seconds) + " s");
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%d queries on 100 DAGs, %d connected, %.2f s",
                queries, connected, seconds);
  o.detail = buf;
  return o;
}

Outcome WorkedExampleAndSetProperties() {
  Outcome o;
  SemanticNet small = testing::SmallNet();
  auto d = ConceptualDistance(small, {"B"}, {"C"});
  o.Require(d.has_value(), "worked example: disconnected");
  if (d) {
    o.Require(d->distance == 7.0 / 3.0, "worked example: distance");
    o.Require(d->path.concepts ==
                  std::vector<std::string>{"B", "A", "R", "C"},
              "worked example: path");
    PathSearcher searcher(small);
    unsigned __int128 units = 0;
    for (const std::string &id : d->path.concepts) {
      units += searcher.weight(small.Require(id));
    }
    // 1/3 + 1/2 + 1 + 1/2 = 14/6 exactly.
    o.Require(units * 3 == searcher.scale() * 7,
              "worked example: exact rational cost");
  }

  std::mt19937_64 rng(7);
  int pairs = 0;
  while (pairs < 1000) {
    std::vector<std::vector<int>> dag = testing::RandomDag(rng, 60, 120);
    SemanticNet net = testing::NetFromParents(dag);
    PathSearcher searcher(net);
    for (int q = 0; q < 20; ++q, ++pairs) {
      std::vector<int> s1 = RandomSet(rng, dag.size(), 4);
      std::vector<int> s2 = RandomSet(rng, dag.size(), 4);
      std::vector<int> t = RandomSet(rng, dag.size(), 4);
      auto span = [](const std::vector<int> &v) {
        return std::vector<ConceptIndex>(v.begin(), v.end());
      };
      auto st = searcher.Distance(span(s1), span(t));
      auto ts = searcher.Distance(span(t), span(s1));
      const std::string at = "pair " + std::to_string(pairs);
      o.Require(st.has_value() == ts.has_value(), at + ": symmetry");
      if (st && ts) {
        o.Require(st->distance == ts->distance, at + ": symmetry");
      }
      std::set<int> merged(s1.begin(), s1.end());
      merged.insert(s2.begin(), s2.end());
      auto u = searcher.Distance(
          span(std::vector<int>(merged.begin(), merged.end())), span(t));
      auto s2t = searcher.Distance(span(s2), span(t));
      if (st) o.Require(u && u->distance <= st->distance, at + ": union");
      if (s2t) o.Require(u && u->distance <= s2t->distance, at + ": union");
      if (u) {
        double best = std::min(st ? st->distance : INFINITY,
                               s2t ? s2t->distance : INFINITY);
        o.Require(u->distance == best, at + ": union equals minimum");
      }
    }
  }
  o.detail = "exact 7/3 path B-A-R-C; " + std::to_string(pairs) +
             " set pairs for symmetry and union";
  return o;
}

Outcome AssociationRatioValues() {
  Outcome o;
  std::ifstream in(testing::SourceDir() / "tests" / "data" / "ar_values.tsv");
  int rows = 0;
  double worst = 0.0;
  ForEachTsvLine(in, [&](int, const std::vector<std::string> &f) {
    double got = AssociationRatio(std::stoll(f[0]), std::stoll(f[1]),
                                  std::stoll(f[2]), std::stoll(f[3]));
    worst = std::max(worst, std::fabs(got - std::stod(f[4])));
    ++rows;
  });
  o.Require(rows == 50, "expected 50 reference rows");
  o.Require(worst <= 1e-9, "reference error " + FormatDouble(worst));
  o.Require(std::fabs(AssociationRatio(4, 10, 5, 100) - 1.2) <= 1e-9,
            "0.4 * log2(8) case");
  o.Require(AssociationRatio(0, 10, 5, 100) == 0.0, "zero count convention");
  o.Require(AssociationRatio(1, 10, 10, 100) == 0.0, "unit ratio convention");
  std::mt19937_64 rng(3);
  int doubled = 0;
  while (doubled < 1000) {
    int64_t total = 1 + static_cast<int64_t>(rng() % 100000);
    int64_t class_total = 1 + static_cast<int64_t>(rng() % total);
    int64_t word = 1 + static_cast<int64_t>(rng() % total);
    int64_t low = std::max<int64_t>(0, word - (total - class_total));
    int64_t high = std::min(word, class_total);
    if (low > high) continue;
    int64_t cw = low + static_cast<int64_t>(rng() % (high - low + 1));
    o.Require(AssociationRatio(cw, class_total, word, total) ==
                  AssociationRatio(2 * cw, 2 * class_total, 2 * word,
                                   2 * total),
              "doubling changed a value");
    ++doubled;
  }
  o.detail = "50 reference values, max error " + FormatDouble(worst) +
             "; 1000 doublings exact";
  return o;
}

SalienceTable RandomTable(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> score(0.001, 3.0);
  std::vector<std::tuple<std::string, std::string, double, int64_t>> rows;
  for (int w = 0; w < 20; ++w) {
    for (int c = 0; c < 5; ++c) {
      if (rng() % 2) continue;
      rows.push_back({"w" + std::to_string(w), "c" + std::to_string(c),
                      score(rng), static_cast<int64_t>(1 + rng() % 5)});
    }
  }
  if (rows.empty()) rows.push_back({"w0", "c0", 1.0, 1});
  return SalienceTable::FromScores(rows);
}

std::vector<std::string> RandomTokens(std::mt19937_64 &rng) {
  std::vector<std::string> tokens(rng() % 8);
  for (auto &t : tokens) t = "w" + std::to_string(rng() % 25);
  return tokens;
}

Outcome ScoringProperties() {
  Outcome o;
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> factor(0.001, 1000.0);
  for (int trial = 0; trial < 1000; ++trial) {
    SalienceTable t = RandomTable(rng);
    std::vector<std::string> a = RandomTokens(rng);
    std::vector<std::string> b = RandomTokens(rng);
    std::vector<std::string> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    ClassScoreVector va = ScoreDefinition(a, t);
    ClassScoreVector vb = ScoreDefinition(b, t);
    ClassScoreVector vab = ScoreDefinition(ab, t);
    for (size_t c = 0; c < t.classes().size(); ++c) {
      o.Require(std::fabs(vab.scores[c] - va.scores[c] - vb.scores[c]) <= 1e-9,
                "additivity, trial " + std::to_string(trial));
    }
    std::vector<std::string> padded = a;
    padded.insert(padded.begin() + static_cast<long>(rng() % (a.size() + 1)),
                  "unseen");
    ClassScoreVector vp = ScoreDefinition(padded, t);
    o.Require(vp.scores == va.scores && vp.winner == va.winner,
              "zero-token neutrality, trial " + std::to_string(trial));
    SalienceTable scaled = t.Scaled(factor(rng));
    o.Require(ScoreDefinition(ab, scaled).winner == vab.winner,
              "scaling changed the winner, trial " + std::to_string(trial));
  }
  o.detail = "1000 random tables and definitions";
  return o;
}

// Labelled corpus with one sense per (class, genus) occurrence.
struct Synthetic {
  Dictionary dict;
  LabelledCorpus labels;
};

Synthetic BuildSynthetic(
    const std::vector<std::tuple<std::string, std::string, int>> &cells) {
  std::vector<Sense> senses;
  Synthetic s;
  int next = 0;
  for (const auto &[cls, genus, count] : cells) {
    for (int i = 0; i < count; ++i) {
      std::string id = "s" + std::to_string(next++) + "_1";
      senses.push_back(testing::MakeSense(id, "h" + id, {genus}, genus));
      s.labels.push_back(testing::MakeLabel(id, cls));
    }
  }
  s.dict = Dictionary::FromSenses(std::move(senses));
  return s;
}

Outcome FilterSemantics() {
  Outcome o;
  testing::Fixture f = testing::LoadFixture();
  LabelledCorpus labels =
      LoadLabels(testing::GoldenDir() / "fixture" / "labels.jsonl");
  GenusFrequencyTable table = GenusFrequencyTable::Build(labels, f.dict);
  int sweeps = 0;
  for (const std::string &cls : table.Classes()) {
    for (int combo = 0; combo < 3; ++combo) {
      FilterConfig config{combo == 1, combo == 2, 1};
      GenusSelection prev =
          ApplyFilters(table, cls, f.bilingual, f.net, config);
      for (int t = 2; t <= 10; ++t) {
        config.f3_threshold = t;
        GenusSelection next =
            ApplyFilters(table, cls, f.bilingual, f.net, config);
        o.Require(std::includes(prev.selected.begin(), prev.selected.end(),
                                next.selected.begin(), next.selected.end()),
                  cls + " grew at threshold " + std::to_string(t));
        prev = next;
      }
      ++sweeps;
    }
  }

  const SemanticNet empty_net = testing::NetFromText("R\tf\tr\t\n");
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::tuple<std::string, std::string, int>> cells;
    for (int c = 0; c < 4; ++c) {
      for (int g = 0; g < 8; ++g) {
        if (rng() % 3 == 0) continue;
        cells.emplace_back("c" + std::to_string(c), "g" + std::to_string(g),
                           static_cast<int>(1 + rng() % 6));
      }
    }
    cells.emplace_back("c0", "g0", 1);
    Synthetic s = BuildSynthetic(cells);
    GenusFrequencyTable t = GenusFrequencyTable::Build(s.labels, s.dict);
    std::map<std::string, int> kept_by;
    for (const std::string &cls : t.Classes()) {
      for (const std::string &g :
           ApplyFilters(t, cls, BilingualMap(), empty_net, {false, true, 0})
               .selected) {
        ++kept_by[g];
      }
    }
    for (const auto &[g, n] : kept_by) {
      o.Require(n <= 1, "genus " + g + " kept by " + std::to_string(n) +
                            " classes, trial " + std::to_string(trial));
    }
  }

  Synthetic boundary = BuildSynthetic({{"C", "a", 10}, {"C", "b", 9}});
  GenusFrequencyTable bt =
      GenusFrequencyTable::Build(boundary.labels, boundary.dict);
  GenusSelection sel =
      ApplyFilters(bt, "C", BilingualMap(), empty_net, {false, false, 9});
  o.Require(sel.selected == std::set<std::string>{"a"},
            "threshold 9 must keep exactly the count-10 genus");
  o.Require(sel.rejected.count("b") && sel.rejected.at("b") == FilterReason::kF3,
            "count-9 genus must fail F3");
  o.detail = std::to_string(sweeps) +
             " fixture sweeps over 1..10; 500 majority trials; boundary 10/9";
  return o;
}

bool Acyclic(const Taxonomy &t) {
  for (const auto &[id, node] : t.nodes) {
    std::string x = id;
    for (size_t steps = 0;; ++steps) {
      const auto &h = t.nodes.at(x).hypernym;
      if (!h) break;
      if (*h == id || steps > t.nodes.size()) return false;
      x = *h;
    }
  }
  return true;
}

Outcome TaxonomyIntegrity() {
  Outcome o;
  std::mt19937_64 rng(77);
  int64_t total_pairs = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<HypernymPair> pairs;
    for (const auto &[a, b] : testing::RandomPairList(rng)) {
      pairs.push_back({a, b});
    }
    total_pairs += static_cast<int64_t>(pairs.size());
    Taxonomy t = BuildTaxonomy(pairs, "X");
    const std::string at = "trial " + std::to_string(trial);
    o.Require(Acyclic(t), at + ": cycle");
    o.Require(static_cast<size_t>(t.edges()) + t.duplicate_pairs.size() +
                      t.cycle_pairs.size() + t.self_loop_pairs.size() ==
                  pairs.size(),
              at + ": pair conservation");
    TaxonomyStats s = ComputeStats(t);
    int64_t sum = 0;
    for (int64_t n : s.per_level) sum += n;
    o.Require(sum == static_cast<int64_t>(t.nodes.size()), at + ": level sum");
    for (const auto &[id, node] : t.nodes) {
      if (node.hypernym) {
        o.Require(node.level == t.nodes.at(*node.hypernym).level + 1,
                  at + ": level of " + id);
      } else {
        o.Require(node.level == 1, at + ": top level of " + id);
      }
    }
  }
  const std::vector<HypernymPair> chain_pairs = {{"vino_1_1", "zumo_1_1"},
                                                 {"rueda_1_1", "vino_1_1"}};
  Taxonomy chain = BuildTaxonomy(chain_pairs, "FOOD");
  std::ostringstream text;
  ExportTaxonomy(chain, ExportFormat::kText, text);
  o.Require(text.str() == "zumo_1_1\n  vino_1_1\n    rueda_1_1\n",
            "chain example");
  o.detail = "500 pair lists (" + std::to_string(total_pairs) +
             " pairs); chain zumo_1_1 <- vino_1_1 <- rueda_1_1";
  return o;
}

Outcome EndToEndFixture() {
  Outcome o;
  auto start = Clock::now();
  PipelineConfig config = LoadConfig(testing::FixtureDir() / "pipeline.conf");
  fs::path first = testing::ScratchDir("acceptance_a");
  fs::path second = testing::ScratchDir("acceptance_b");
  config.output = first;
  Manifest a = RunPipeline(config, Execution::kParallel);
  config.output = second;
  RunPipeline(config, Execution::kSerial);
  double seconds = Seconds(start);
  o.Require(a.artifacts.size() == testing::FixtureArtifacts().size(),
            "manifest lists " + std::to_string(a.artifacts.size()) +
                " artifacts");
  for (const std::string &file : testing::GoldenMismatches(first)) {
    o.Require(false, "differs from golden: " + file);
  }
  for (const std::string &file : testing::GoldenMismatches(second)) {
    o.Require(false, "serial run differs from golden: " + file);
  }
  for (const std::string &m : testing::OracleMismatches(first)) {
    o.Require(false, "oracle: " + m);
  }
  o.Require(seconds < 10.0, "took " + FormatDouble(seconds) + " s");
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "%zu artifacts byte-identical, oracles agree, %.2f s for 2 runs",
                a.artifacts.size(), seconds);
  o.detail = buf;
  return o;
}

Outcome ReportShapes() {
  Outcome o;
  std::vector<testing::GoldenRender> renders = testing::PublishedTableRenders();
  for (const testing::GoldenRender &r : renders) {
    o.Require(r.got == r.want, r.name);
  }
  o.detail = std::to_string(renders.size()) + " published tables";
  return o;
}

int Main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>>
      criteria = {
          {"distance equals brute force on random DAGs", DistanceOracle},
          {"worked distance example; symmetry and union",
           WorkedExampleAndSetProperties},
          {"association ratio values and conventions", AssociationRatioValues},
          {"definition scoring properties", ScoringProperties},
          {"genus filter semantics", FilterSemantics},
          {"taxonomy integrity", TaxonomyIntegrity},
          {"end-to-end fixture", EndToEndFixture},
          {"report table shapes", ReportShapes}};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = o.failures.empty();
    if (!ok) ++failed;
    std::printf("%s  %zu  %s: %s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str());
    for (size_t k = 0; k < std::min<size_t>(o.failures.size(), 5); ++k) {
      std::printf("        %s\n", o.failures[k].c_str());
    }
    if (o.failures.size() > 5) {
      std::printf("        ... %zu more\n", o.failures.size() - 5);
    }
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace lextax

int main() { return lextax::Main(); }
