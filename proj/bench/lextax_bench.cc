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

// Serial against parallel timings of the per-sense kernels on a synthetic
// dictionary and net. Argument 0 selects the serial loop, 1 the parallel one.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "lextax/concept_graph.h"
#include "lextax/genus_selector.h"
#include "lextax/lexicon.h"
#include "lextax/parallel.h"
#include "lextax/primary_labeller.h"
#include "lextax/salience.h"
#include "lextax/semantic_labeller.h"
#include "lextax/taxonomy.h"

namespace lextax {
namespace {

constexpr int kConcepts = 1500;
constexpr int kWords = 2000;
constexpr int kSenses = 5000;

std::string Name(const char *prefix, int i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%s%05d", prefix, i);
  return buf;
}

struct Corpus {
  SemanticNet net;
  BilingualMap bilingual;
  Dictionary dict;
  StopwordList stopwords;
  LabelledCorpus first;
  SalienceTable table;
  LabelledCorpus second;
};

SemanticNet MakeNet(std::mt19937_64 &rng) {
  std::vector<Concept> concepts;
  for (int v = 0; v < kConcepts; ++v) {
    Concept c;
    c.id = Name("c", v);
    c.semantic_file = "f" + std::to_string(v % 12);
    c.lemmas = {Name("e", v)};
    if (v >= 12) {
      int k = std::uniform_int_distribution<int>(1, 2)(rng);
      for (int j = 0; j < k; ++j) {
        c.hypernyms.push_back(
            Name("c", std::uniform_int_distribution<int>(0, v - 1)(rng)));
      }
      std::sort(c.hypernyms.begin(), c.hypernyms.end());
      c.hypernyms.erase(std::unique(c.hypernyms.begin(), c.hypernyms.end()),
                        c.hypernyms.end());
    }
    concepts.push_back(std::move(c));
  }
  return SemanticNet::Build(std::move(concepts));
}

Corpus MakeCorpus() {
  std::mt19937_64 rng(7);
  Corpus c{MakeNet(rng), {}, {}, StopwordList({"de", "la", "que"}), {}, {},
           {}};
  std::uniform_int_distribution<int> pick(0, kConcepts - 1);
  std::uniform_int_distribution<int> word(0, kWords - 1);
  for (int w = 0; w < kWords; ++w) {
    int k = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int j = 0; j < k; ++j) {
      c.bilingual.Add(Name("w", w), Name("e", pick(rng)));
    }
  }
  std::vector<Sense> senses;
  std::vector<int> per_word(kWords, 0);
  for (int i = 0; i < kSenses; ++i) {
    int head = word(rng);
    Sense s;
    s.headword = Name("w", head);
    s.sense_id = s.headword + "_1_" + std::to_string(++per_word[head]);
    s.pos = "n";
    int length = std::uniform_int_distribution<int>(4, 12)(rng);
    for (int j = 0; j < length; ++j) {
      s.definition_tokens.push_back(j % 4 == 1 ? "de" : Name("w", word(rng)));
    }
    s.genus = s.definition_tokens.front();
    senses.push_back(std::move(s));
  }
  c.dict = Dictionary::FromSenses(std::move(senses));
  c.first = RunFirstPass(c.dict, c.net, c.bilingual).labels;
  c.table = TrainSalience(c.first, c.dict, c.stopwords);
  c.second = RunSecondPass(c.dict, c.table, c.stopwords).labels;
  return c;
}

const Corpus &Shared() {
  static const Corpus corpus = MakeCorpus();
  return corpus;
}

Execution Mode(const benchmark::State &state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_FirstPass(benchmark::State &state) {
  const Corpus &c = Shared();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        RunFirstPass(c.dict, c.net, c.bilingual, Mode(state)));
  }
}

void BM_CountCorpus(benchmark::State &state) {
  const Corpus &c = Shared();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        CountCorpus(c.first, c.dict, c.stopwords, Mode(state)));
  }
}

void BM_SecondPass(benchmark::State &state) {
  const Corpus &c = Shared();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        RunSecondPass(c.dict, c.table, c.stopwords, 1, Mode(state)));
  }
}

void BM_CollectPairs(benchmark::State &state) {
  const Corpus &c = Shared();
  GenusSelection selection;
  selection.cls = c.second.front().tag;
  for (const LabelledSense &l : c.second) {
    if (l.tag != selection.cls) continue;
    const Sense *s = c.dict.Find(l.sense_id);
    if (s != nullptr && s->genus) selection.selected.insert(*s->genus);
  }
  GenusDisambiguator disambiguator(c.dict, c.net, c.bilingual,
                                   GenusStrategy::kConceptualDistance);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CollectPairs(c.second, selection, c.dict,
                                          disambiguator, Mode(state)));
  }
}

void BM_Distance(benchmark::State &state) {
  const Corpus &c = Shared();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, kConcepts - 1);
  std::vector<std::string> a, b;
  for (int i = 0; i < 3; ++i) {
    a.push_back(Name("c", pick(rng)));
    b.push_back(Name("c", pick(rng)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(ConceptualDistance(c.net, a, b));
  }
}

BENCHMARK(BM_FirstPass)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountCorpus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SecondPass)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CollectPairs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Distance)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace lextax

BENCHMARK_MAIN();
