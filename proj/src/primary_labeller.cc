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

#include "lextax/primary_labeller.h"

#include <algorithm>
#include <exception>
#include <map>
#include <set>

namespace lextax {

namespace {

struct Translation {
  bool has_bilingual = false;
  std::vector<ConceptIndex> concepts;
};

using TranslationCache = std::map<std::string, Translation, std::less<>>;

Translation Translate(std::string_view word, const BilingualMap &bilingual,
                      const SemanticNet &net) {
  Translation t;
  const std::set<std::string> *targets = bilingual.Targets(word);
  if (targets == nullptr) return t;
  t.has_bilingual = true;
  for (const std::string &target : *targets) {
    auto concepts = net.ConceptsOfLemma(target);
    t.concepts.insert(t.concepts.end(), concepts.begin(), concepts.end());
  }
  std::sort(t.concepts.begin(), t.concepts.end());
  t.concepts.erase(std::unique(t.concepts.begin(), t.concepts.end()),
                   t.concepts.end());
  return t;
}

std::optional<LabelledSense> LabelFromConcepts(
    const Sense &sense, const std::vector<ConceptIndex> &headword_concepts,
    const std::vector<ConceptIndex> &genus_concepts, const SemanticNet &net,
    PathSearcher &searcher) {
  if (headword_concepts.empty() || genus_concepts.empty()) return std::nullopt;
  std::optional<DistanceResult> result =
      searcher.Distance(headword_concepts, genus_concepts);
  if (!result) return std::nullopt;
  const Concept &genus_concept = net.node(net.Require(result->best_pair.second));
  LabelledSense label;
  label.sense_id = sense.sense_id;
  label.tag = genus_concept.semantic_file;
  label.round = 0;
  label.evidence = DistanceEvidence{result->best_pair.first,
                                    result->best_pair.second,
                                    result->distance};
  return label;
}

}  // namespace

std::vector<ConceptIndex> TranslateToConcepts(std::string_view word,
                                              const BilingualMap &bilingual,
                                              const SemanticNet &net) {
  return Translate(word, bilingual, net).concepts;
}

std::optional<LabelledSense> LabelSenseByDistance(const Sense &sense,
                                                  const SemanticNet &net,
                                                  const BilingualMap &bilingual,
                                                  PathSearcher &searcher) {
  if (!sense.genus) return std::nullopt;
  return LabelFromConcepts(sense,
                           TranslateToConcepts(sense.headword, bilingual, net),
                           TranslateToConcepts(*sense.genus, bilingual, net),
                           net, searcher);
}

std::optional<LabelledSense> LabelSenseByDistance(
    const Sense &sense, const SemanticNet &net, const BilingualMap &bilingual) {
  PathSearcher searcher(net);
  return LabelSenseByDistance(sense, net, bilingual, searcher);
}

std::vector<std::pair<std::string, int64_t>> CoverageReport::Counters() const {
  return {
      {"noun_definitions", definitions},
      {"noun_definitions_with_genus", definitions_with_genus},
      {"genus_terms", genus_terms},
      {"genus_terms_with_bilingual", genus_terms_with_bilingual},
      {"genus_terms_with_net", genus_terms_with_net},
      {"headwords", headwords},
      {"headwords_with_bilingual", headwords_with_bilingual},
      {"headwords_with_net", headwords_with_net},
      {"definitions_with_bilingual", definitions_with_bilingual},
      {"definitions_with_net", definitions_with_net},
      {"definitions_labelled", definitions_labelled},
  };
}

FirstPassResult RunFirstPass(const Dictionary &dict, const SemanticNet &net,
                             const BilingualMap &bilingual,
                             Execution execution) {
  std::vector<const Sense *> nouns;
  for (const Sense &sense : dict.senses()) {
    if (sense.pos == kNounPos) nouns.push_back(&sense);
  }

  // Every word is translated once, up front; the kernels only read the cache.
  TranslationCache cache;
  auto translation = [&](const std::string &word) -> const Translation & {
    auto it = cache.find(word);
    if (it == cache.end()) {
      it = cache.emplace(word, Translate(word, bilingual, net)).first;
    }
    return it->second;
  };
  for (const Sense *sense : nouns) {
    translation(sense->headword);
    if (sense->genus) translation(*sense->genus);
  }

  const PathSearcher prototype(net);
  std::vector<std::optional<LabelledSense>> slots(nouns.size());
  auto label_one = [&](size_t i, PathSearcher &searcher) {
    const Sense &sense = *nouns[i];
    if (!sense.genus) return;
    slots[i] = LabelFromConcepts(sense, cache.find(sense.headword)->second.concepts,
                                 cache.find(*sense.genus)->second.concepts, net,
                                 searcher);
  };

  if (execution == Execution::kSerial) {
    PathSearcher searcher(prototype);
    for (size_t i = 0; i < nouns.size(); ++i) label_one(i, searcher);
  } else {
    std::exception_ptr failure;
#pragma omp parallel
    {
      PathSearcher searcher(prototype);
#pragma omp for schedule(dynamic, 8)
      for (size_t i = 0; i < nouns.size(); ++i) {
        try {
          label_one(i, searcher);
        } catch (...) {
#pragma omp critical(lextax_first_pass_failure)
          if (!failure) failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  FirstPassResult result;
  for (auto &slot : slots) {
    if (slot) result.labels.push_back(std::move(*slot));
  }

  CoverageReport &report = result.report;
  std::set<std::string_view> genus_terms;
  std::set<std::string_view> headwords;
  for (const Sense *sense : nouns) {
    ++report.definitions;
    headwords.insert(sense->headword);
    if (!sense->genus) continue;
    ++report.definitions_with_genus;
    genus_terms.insert(*sense->genus);
    const Translation &h = cache.find(sense->headword)->second;
    const Translation &g = cache.find(*sense->genus)->second;
    if (h.has_bilingual && g.has_bilingual) ++report.definitions_with_bilingual;
    if (!h.concepts.empty() && !g.concepts.empty()) ++report.definitions_with_net;
  }
  for (std::string_view g : genus_terms) {
    const Translation &t = cache.find(g)->second;
    ++report.genus_terms;
    if (t.has_bilingual) ++report.genus_terms_with_bilingual;
    if (!t.concepts.empty()) ++report.genus_terms_with_net;
  }
  for (std::string_view h : headwords) {
    const Translation &t = cache.find(h)->second;
    ++report.headwords;
    if (t.has_bilingual) ++report.headwords_with_bilingual;
    if (!t.concepts.empty()) ++report.headwords_with_net;
  }
  report.definitions_labelled = static_cast<int64_t>(result.labels.size());

  int64_t connected_words = 0;
  int64_t connections = 0;
  for (const auto &[source, targets] : bilingual.entries()) {
    size_t n = Translate(source, bilingual, net).concepts.size();
    if (n == 0) continue;
    ++connected_words;
    connections += static_cast<int64_t>(n);
  }
  if (connected_words > 0) {
    report.bilingual_polysemy =
        static_cast<double>(connections) / static_cast<double>(connected_words);
  }
  int64_t senses = 0;
  for (const auto &[lemma, concepts] : net.lemma_index()) {
    senses += static_cast<int64_t>(concepts.size());
  }
  if (!net.lemma_index().empty()) {
    report.net_polysemy = static_cast<double>(senses) /
                          static_cast<double>(net.lemma_index().size());
  }
  return result;
}

}  // namespace lextax
