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

// First labelling pass. Headword and genus of every noun sense are mapped
// through the bilingual dictionary onto concepts of the net; the closest
// (headword concept, genus concept) pair under the conceptual distance picks
// the genus concept, and its semantic file becomes the sense's tag.

#ifndef LEXTAX_PRIMARY_LABELLER_H_
#define LEXTAX_PRIMARY_LABELLER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lextax/concept_graph.h"
#include "lextax/labels.h"
#include "lextax/lexicon.h"
#include "lextax/parallel.h"

namespace lextax {

// Every concept any translation of `word` names; sorted, possibly empty.
std::vector<ConceptIndex> TranslateToConcepts(std::string_view word,
                                              const BilingualMap &bilingual,
                                              const SemanticNet &net);

// Labels one sense, or returns nothing when it has no genus, when headword or
// genus has no concept, or when no concept pair is connected.
std::optional<LabelledSense> LabelSenseByDistance(const Sense &sense,
                                                  const SemanticNet &net,
                                                  const BilingualMap &bilingual,
                                                  PathSearcher &searcher);

std::optional<LabelledSense> LabelSenseByDistance(const Sense &sense,
                                                  const SemanticNet &net,
                                                  const BilingualMap &bilingual);

// Coverage counters of the first pass, one per row of the coverage table.
struct CoverageReport {
  int64_t definitions = 0;
  int64_t definitions_with_genus = 0;
  int64_t genus_terms = 0;
  int64_t genus_terms_with_bilingual = 0;
  int64_t genus_terms_with_net = 0;
  int64_t headwords = 0;
  int64_t headwords_with_bilingual = 0;
  int64_t headwords_with_net = 0;
  int64_t definitions_with_bilingual = 0;
  int64_t definitions_with_net = 0;
  int64_t definitions_labelled = 0;

  // Mean number of concepts per bilingual source word that reaches the net,
  // and mean number of concepts per lemma of the net.
  double bilingual_polysemy = 0.0;
  double net_polysemy = 0.0;

  // (name, value) pairs in table order.
  std::vector<std::pair<std::string, int64_t>> Counters() const;

  bool operator==(const CoverageReport &other) const = default;
};

struct FirstPassResult {
  LabelledCorpus labels;  // dictionary order
  CoverageReport report;
};

// Labels every noun sense. Only senses with pos "n" are considered.
FirstPassResult RunFirstPass(const Dictionary &dict, const SemanticNet &net,
                             const BilingualMap &bilingual,
                             Execution execution = Execution::kParallel);

}  // namespace lextax

#endif  // LEXTAX_PRIMARY_LABELLER_H_
