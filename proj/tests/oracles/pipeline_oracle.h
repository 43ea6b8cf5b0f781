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

// Straightforward reference implementation of every pipeline stage, written
// against plain maps and the brute-force graph oracle. Stage outputs of the
// library are compared against these.

#ifndef LEXTAX_TESTS_ORACLES_PIPELINE_ORACLE_H_
#define LEXTAX_TESTS_ORACLES_PIPELINE_ORACLE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graph_oracle.h"
#include "lextax/lexicon.h"

namespace lextax::oracle {

// Concept indices of every net lemma equal to a translation of `word`.
std::vector<int> Translations(const std::string &word,
                              const BilingualMap &bilingual,
                              const std::vector<Concept> &concepts,
                              const Graph &graph);

struct FirstLabel {
  std::string sense_id;
  std::string tag;
  std::string headword_concept;
  std::string genus_concept;
  double distance = 0.0;
};

struct FirstPass {
  std::vector<FirstLabel> labels;
  std::map<std::string, int64_t> counters;  // coverage counter name -> value
  double bilingual_polysemy = 0.0;
  double net_polysemy = 0.0;
};

FirstPass RunFirstPass(const Dictionary &dict,
                       const std::vector<Concept> &concepts,
                       const BilingualMap &bilingual);

// (sense id, tag) in corpus order.
using Labels = std::vector<std::pair<std::string, std::string>>;

struct Cell {
  double ar = 0.0;
  int64_t local = 0;
};

// (word, class) -> salient cell; only AR > 0 is kept.
using Table = std::map<std::pair<std::string, std::string>, Cell>;

Table Train(const Labels &labels, const Dictionary &dict,
            const StopwordList &stopwords);

// Association ratio from raw counts, in long double.
long double AssociationRatio(int64_t class_word, int64_t class_total,
                             int64_t word, int64_t total);

struct SecondPass {
  Labels labels;
  std::map<std::string, int64_t> histogram;
  int64_t definitions = 0;
  int64_t ties = 0;
};

SecondPass Relabel(const Dictionary &dict, const Table &table,
                   const StopwordList &stopwords);

// class -> genus -> number of labelled senses.
using GenusCounts = std::map<std::string, std::map<std::string, int64_t>>;

GenusCounts CountGenus(const Labels &labels, const Dictionary &dict);

struct Selection {
  std::set<std::string> selected;
  std::map<std::string, std::string> rejected;  // genus -> "F1" | "F2" | "F3"
};

Selection Select(const GenusCounts &counts, const std::string &cls, bool f1,
                 bool f2, int threshold, const BilingualMap &bilingual,
                 const std::vector<Concept> &concepts, const Graph &graph);

// Lowest-numbered sense of the genus headword other than the sense itself.
std::optional<std::string> FirstSense(const Sense &sense,
                                      const Dictionary &dict);

// Genus sense nearest to the hyponym headword. `chosen` maps sense ids to
// the headword concept their distance labelling picked.
std::optional<std::string> NearestSense(
    const Sense &sense, const Dictionary &dict,
    const std::vector<Concept> &concepts, const Graph &graph,
    const BilingualMap &bilingual,
    const std::map<std::string, std::string> &chosen);

struct Pairs {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> unresolved;
  std::vector<std::string> self_loops;
};

Pairs CollectPairs(const Labels &labels, const std::string &cls,
                   const std::set<std::string> &selected,
                   const Dictionary &dict, bool by_distance,
                   const std::vector<Concept> &concepts,
                   const BilingualMap &bilingual);

struct Forest {
  std::map<std::string, std::optional<std::string>> parent;
  std::map<std::string, int> level;
  std::set<std::string> tops;
  int64_t duplicates = 0;
  int64_t cycles = 0;
  int64_t self_loops = 0;
};

Forest Assemble(const std::vector<std::pair<std::string, std::string>> &pairs);

struct Stats {
  int64_t genus_terms = 0;
  int64_t senses = 0;
  int64_t tops = 0;
  int levels = 0;
  std::map<int, int64_t> per_level;
};

Stats Measure(const Forest &forest, const Dictionary &dict);

}  // namespace lextax::oracle

#endif  // LEXTAX_TESTS_ORACLES_PIPELINE_ORACLE_H_
