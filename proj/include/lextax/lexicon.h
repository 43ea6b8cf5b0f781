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

// Lexical resources: the monolingual dictionary, the concept net with its
// hypernym links and semantic files, and the bilingual word map, together
// with readers and writers for their on-disk formats.
//
//   dictionary     JSON lines {"headword","sense_id","pos","definition",
//                  optional "genus"}
//   semantic net   TSV: concept_id, semantic_file, lemmas, hypernyms
//                  (lists comma-joined, hypernyms empty for roots)
//   bilingual map  TSV: source word, target word
//
// All structures are immutable once built and may be shared across threads.

#ifndef LEXTAX_LEXICON_H_
#define LEXTAX_LEXICON_H_

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lextax {

// One dictionary definition.
struct Sense {
  std::string headword;
  std::string sense_id;
  std::string pos;
  std::vector<std::string> definition_tokens;
  std::optional<std::string> genus;

  bool operator==(const Sense &other) const = default;
};

// Word forms that can never be a genus term: determiners, prepositions,
// quantity words. Entries ending in '*' match by prefix.
class GenusSkipList {
 public:
  GenusSkipList() = default;
  explicit GenusSkipList(const std::vector<std::string> &patterns);

  // Built-in list for Spanish noun definitions.
  static GenusSkipList SpanishDefault();

  // One pattern per line; '#' comments and blank lines ignored.
  static GenusSkipList Parse(std::istream &in);

  bool Matches(std::string_view token) const;

 private:
  std::set<std::string, std::less<>> exact_;
  std::vector<std::string> prefixes_;
};

// Returns the first token not matched by `skip`, or nothing when every token
// is skipped.
std::optional<std::string> ExtractGenus(std::span<const std::string> tokens,
                                        const GenusSkipList &skip);

class Dictionary {
 public:
  // Validates sense id uniqueness and non-empty definitions.
  static Dictionary FromSenses(std::vector<Sense> senses);

  const std::vector<Sense> &senses() const { return senses_; }
  size_t size() const { return senses_.size(); }

  // Sense with the given id, or null.
  const Sense *Find(std::string_view sense_id) const;

  // Position of a sense in senses(), or nothing.
  std::optional<size_t> PositionOf(std::string_view sense_id) const;

  // Sense ids of a headword in input order, or null for unknown headwords.
  const std::vector<std::string> *SensesOf(std::string_view headword) const;

  const std::map<std::string, std::vector<std::string>, std::less<>> &index()
      const {
    return index_;
  }

  bool operator==(const Dictionary &other) const {
    return senses_ == other.senses_;
  }

 private:
  std::vector<Sense> senses_;
  std::map<std::string, size_t, std::less<>> by_id_;
  std::map<std::string, std::vector<std::string>, std::less<>> index_;
};

// Reads a JSON-lines dictionary. Definitions are tokenized with Tokenize();
// senses without a "genus" field get ExtractGenus() applied; an empty "genus"
// means the sense has none.
// Throws DataError naming the offending line.
Dictionary ParseSenseFile(std::istream &in, const GenusSkipList &skip);

// Writes one JSON object per sense, definition as space-joined tokens and the
// genus always explicit, so that re-parsing yields an equal dictionary.
void WriteSenseFile(const Dictionary &dict, std::ostream &out);

// Orders the sense ids of one headword by their trailing numeric fields
// ("vino_1_2" -> 1, 2), then by id.
bool SenseNumberLess(std::string_view a, std::string_view b);

using ConceptIndex = uint32_t;

struct Concept {
  std::string id;
  std::string semantic_file;
  std::vector<std::string> lemmas;     // sorted, unique
  std::vector<std::string> hypernyms;  // sorted, unique
  int depth = 0;                       // 1 for roots

  bool operator==(const Concept &other) const = default;
};

// Hypernym graph over concepts. Concepts are stored sorted by id, so
// ConceptIndex order equals id order.
class SemanticNet {
 public:
  // Links, validates and computes depths. Throws DataError on duplicate ids,
  // concepts without lemmas, dangling hypernyms and cycles.
  static SemanticNet Build(std::vector<Concept> concepts);

  size_t size() const { return concepts_.size(); }
  const Concept &node(ConceptIndex i) const { return concepts_[i]; }
  const std::vector<Concept> &concepts() const { return concepts_; }

  std::optional<ConceptIndex> Find(std::string_view id) const;

  // Same as Find() but throws DataError for unknown ids.
  ConceptIndex Require(std::string_view id) const;

  std::span<const ConceptIndex> parents(ConceptIndex i) const {
    return parents_[i];
  }
  std::span<const ConceptIndex> children(ConceptIndex i) const {
    return children_[i];
  }

  // Concepts carrying `lemma`, sorted; empty when none.
  std::span<const ConceptIndex> ConceptsOfLemma(std::string_view lemma) const;

  const std::map<std::string, std::vector<ConceptIndex>, std::less<>> &
  lemma_index() const {
    return lemma_index_;
  }

  // Distinct semantic files, sorted.
  std::vector<std::string> SemanticFiles() const;

  bool operator==(const SemanticNet &other) const {
    return concepts_ == other.concepts_;
  }

 private:
  std::vector<Concept> concepts_;
  std::vector<std::vector<ConceptIndex>> parents_;
  std::vector<std::vector<ConceptIndex>> children_;
  std::map<std::string, std::vector<ConceptIndex>, std::less<>> lemma_index_;
};

SemanticNet ParseSemanticNet(std::istream &in);
void WriteSemanticNet(const SemanticNet &net, std::ostream &out);

// Source word -> set of target words. Source words are lowercased like
// dictionary tokens; targets are kept verbatim.
class BilingualMap {
 public:
  void Add(std::string_view source, std::string_view target);

  // Targets of `source`, or null.
  const std::set<std::string> *Targets(std::string_view source) const;

  const std::map<std::string, std::set<std::string>, std::less<>> &entries()
      const {
    return entries_;
  }
  size_t size() const { return entries_.size(); }

  bool operator==(const BilingualMap &other) const = default;

 private:
  std::map<std::string, std::set<std::string>, std::less<>> entries_;
};

BilingualMap ParseBilingual(std::istream &in);
void WriteBilingual(const BilingualMap &map, std::ostream &out);

// Content-word filter used by training and scoring.
class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(const std::vector<std::string> &words);

  // One word per line; '#' comments and blank lines ignored.
  static StopwordList Parse(std::istream &in);

  bool Contains(std::string_view word) const {
    return words_.find(word) != words_.end();
  }
  size_t size() const { return words_.size(); }

 private:
  std::set<std::string, std::less<>> words_;
};

// Counts over a dictionary's noun senses, one per row of the coverage table.
struct DictionaryCounts {
  int64_t definitions = 0;
  int64_t definitions_with_genus = 0;
  int64_t genus_terms = 0;
  int64_t headwords = 0;

  bool operator==(const DictionaryCounts &other) const = default;
};

DictionaryCounts CountDictionary(const Dictionary &dict);

// Part of speech the pipeline works on.
inline constexpr std::string_view kNounPos = "n";

}  // namespace lextax

#endif  // LEXTAX_LEXICON_H_
