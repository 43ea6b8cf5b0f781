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

// Per-class taxonomies of dictionary senses.
//
// Each labelled sense whose genus term was selected is linked to one sense of
// that genus (genus sense disambiguation), giving a (hyponym, hypernym) pair.
// The pairs are assembled into a forest: a sense keeps the first hypernym it
// is given, self-loops are dropped, and every cycle loses the pair whose
// hyponym has the greatest sense id. All drops are reported.

#ifndef LEXTAX_TAXONOMY_H_
#define LEXTAX_TAXONOMY_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lextax/concept_graph.h"
#include "lextax/genus_selector.h"
#include "lextax/labels.h"
#include "lextax/lexicon.h"
#include "lextax/parallel.h"

namespace lextax {

enum class GenusStrategy {
  // Lowest-numbered sense of the genus headword.
  kFirstSense,
  // Genus sense whose own headword concept is closest to the hyponym's
  // headword concepts.
  kConceptualDistance,
};

GenusStrategy ParseGenusStrategy(std::string_view name);
std::string GenusStrategyName(GenusStrategy strategy);

// Picks the dictionary sense a genus term refers to. Thread-compatible: the
// const methods may be called concurrently.
class GenusDisambiguator {
 public:
  GenusDisambiguator(const Dictionary &dict, const SemanticNet &net,
                     const BilingualMap &bilingual, GenusStrategy strategy);

  GenusStrategy strategy() const { return strategy_; }

  // Sense of `sense.genus`, never `sense` itself; nothing when the sense has
  // no genus, the genus is not a headword, or no candidate qualifies.
  std::optional<std::string> Disambiguate(const Sense &sense) const;

  // Same, with a caller-owned searcher for the distance strategy.
  std::optional<std::string> Disambiguate(const Sense &sense,
                                          PathSearcher &searcher) const;

  // Concepts that stand for a sense's headword: the headword concept chosen
  // by its own distance labelling when there is one, otherwise every
  // translation concept of the headword.
  std::vector<ConceptIndex> SenseConcepts(const Sense &sense) const;

  const PathSearcher &prototype() const { return prototype_; }

 private:
  const Dictionary &dict_;
  const SemanticNet &net_;
  const BilingualMap &bilingual_;
  GenusStrategy strategy_;
  PathSearcher prototype_;
  // Headword concept picked by the distance labelling, per sense id.
  std::map<std::string, ConceptIndex, std::less<>> chosen_;
};

struct HypernymPair {
  std::string hyponym;
  std::string hypernym;

  bool operator==(const HypernymPair &other) const = default;
  auto operator<=>(const HypernymPair &other) const = default;
};

struct PairCollection {
  std::vector<HypernymPair> pairs;      // corpus order
  std::vector<std::string> unresolved;  // genus sense not found
  std::vector<std::string> self_loops;  // genus resolves to the sense itself
};

// Pairs for the senses labelled `selection.cls` whose genus is selected.
PairCollection CollectPairs(const LabelledCorpus &labels,
                            const GenusSelection &selection,
                            const Dictionary &dict,
                            const GenusDisambiguator &disambiguator,
                            Execution execution = Execution::kParallel);

struct TaxonomyNode {
  std::string sense_id;
  std::optional<std::string> hypernym;
  std::set<std::string> children;
  int level = 1;

  bool operator==(const TaxonomyNode &other) const = default;
};

struct Taxonomy {
  std::string cls;
  std::map<std::string, TaxonomyNode> nodes;
  std::set<std::string> tops;
  // Each broken cycle, starting at its smallest sense id and following
  // hypernym links.
  std::vector<std::vector<std::string>> dropped_cycles;
  std::vector<HypernymPair> cycle_pairs;      // pairs removed to break cycles
  std::vector<HypernymPair> duplicate_pairs;  // second hypernym of a sense
  std::vector<HypernymPair> self_loop_pairs;

  // Number of hypernym edges kept.
  int64_t edges() const;

  bool operator==(const Taxonomy &other) const = default;
};

Taxonomy BuildTaxonomy(std::span<const HypernymPair> pairs,
                       const std::string &cls);

struct AttachmentOutcome {
  std::vector<HypernymPair> applied;
  std::vector<HypernymPair> skipped;  // not a top, or would create a cycle
};

// Hangs top senses under manually chosen parents, adding parents that are not
// yet nodes as new tops, and recomputes levels.
AttachmentOutcome ApplyAttachments(Taxonomy &taxonomy,
                                   std::span<const HypernymPair> attachments);

// TSV "top_sense_id parent_sense_id".
std::vector<HypernymPair> ParseAttachments(std::istream &in);

struct TaxonomyStats {
  int64_t genus_terms = 0;  // distinct headwords among senses with children
  int64_t senses = 0;
  int64_t tops = 0;
  int levels = 0;
  std::vector<int64_t> per_level;  // per_level[0] is level 1

  bool operator==(const TaxonomyStats &other) const = default;
};

// `dict` supplies headwords for the genus count; without it, headwords are
// taken as the sense id up to its first '_'.
TaxonomyStats ComputeStats(const Taxonomy &taxonomy,
                           const Dictionary *dict = nullptr);

enum class ExportFormat { kJson, kDot, kText };

ExportFormat ParseExportFormat(std::string_view name);

void ExportTaxonomy(const Taxonomy &taxonomy, ExportFormat format,
                    std::ostream &out);

Taxonomy ParseTaxonomyJson(std::istream &in);

// Checks the forest invariants; throws InvariantError on violation.
void CheckTaxonomy(const Taxonomy &taxonomy);

}  // namespace lextax

#endif  // LEXTAX_TAXONOMY_H_
