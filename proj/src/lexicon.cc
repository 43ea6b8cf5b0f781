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

#include "lextax/lexicon.h"

#include <algorithm>
#include <charconv>

#include "json.hpp"
#include "lextax/concept_graph.h"
#include "lextax/errors.h"
#include "lextax/text.h"

namespace lextax {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Genus extraction

GenusSkipList::GenusSkipList(const std::vector<std::string> &patterns) {
  for (const std::string &raw : patterns) {
    std::string p = Lowercase(Trim(raw));
    if (p.empty()) continue;
    if (p.size() > 1 && p.back() == '*') {
      p.pop_back();
      prefixes_.push_back(p);
    } else {
      exact_.insert(p);
    }
  }
}

GenusSkipList GenusSkipList::SpanishDefault() {
  return GenusSkipList({
      // articles and determiners
      "el", "la", "los", "las", "lo", "un", "una", "unos", "unas", "este",
      "esta", "estos", "estas", "ese", "esa", "esos", "esas", "aquel",
      "aquella", "su", "sus",
      // prepositions and contractions
      "a", "al", "ante", "bajo", "con", "contra", "de", "del", "desde", "en",
      "entre", "hacia", "hasta", "para", "por", "según", "sin", "sobre",
      "tras",
      // conjunctions
      "y", "e", "o", "u", "ni", "que",
      // quantity words
      "cierto", "cierta", "ciertos", "ciertas", "alguno", "alguna",
      "algunos", "algunas", "cada", "cualquier", "mucho", "mucha", "muchos",
      "muchas", "poco", "poca", "pocos", "pocas", "todo", "toda", "todos",
      "todas", "otro", "otra", "otros", "otras", "varios", "varias",
      // empty heads ("especie de bebida")
      "especie", "clase", "tipo", "variedad",
  });
}

GenusSkipList GenusSkipList::Parse(std::istream &in) {
  std::vector<std::string> patterns;
  ForEachTsvLine(in, [&](int, const std::vector<std::string> &fields) {
    patterns.push_back(fields[0]);
  });
  return GenusSkipList(patterns);
}

bool GenusSkipList::Matches(std::string_view token) const {
  if (exact_.find(token) != exact_.end()) return true;
  for (const std::string &prefix : prefixes_) {
    if (token.substr(0, prefix.size()) == prefix) return true;
  }
  return false;
}

std::optional<std::string> ExtractGenus(std::span<const std::string> tokens,
                                        const GenusSkipList &skip) {
  for (const std::string &token : tokens) {
    if (!skip.Matches(token)) return token;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Dictionary

Dictionary Dictionary::FromSenses(std::vector<Sense> senses) {
  if (senses.empty()) throw DataError("empty dictionary");
  Dictionary dict;
  dict.senses_ = std::move(senses);
  for (size_t i = 0; i < dict.senses_.size(); ++i) {
    const Sense &sense = dict.senses_[i];
    if (sense.sense_id.empty()) {
      throw DataError("sense " + std::to_string(i + 1) + " has no sense_id");
    }
    if (sense.definition_tokens.empty()) {
      throw DataError("sense " + sense.sense_id + " has an empty definition");
    }
    if (!dict.by_id_.emplace(sense.sense_id, i).second) {
      throw DataError("duplicate sense_id " + sense.sense_id);
    }
    dict.index_[sense.headword].push_back(sense.sense_id);
  }
  return dict;
}

const Sense *Dictionary::Find(std::string_view sense_id) const {
  auto it = by_id_.find(sense_id);
  return it == by_id_.end() ? nullptr : &senses_[it->second];
}

std::optional<size_t> Dictionary::PositionOf(std::string_view sense_id) const {
  auto it = by_id_.find(sense_id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::string> *Dictionary::SensesOf(
    std::string_view headword) const {
  auto it = index_.find(headword);
  return it == index_.end() ? nullptr : &it->second;
}

namespace {

const std::string &RequireString(const json &obj, const char *key, int line) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw DataError(line, std::string("missing field \"") + key + "\"");
  }
  if (!it->is_string()) {
    throw DataError(line, std::string("field \"") + key + "\" is not a string");
  }
  return it->get_ref<const std::string &>();
}

// Trailing numeric fields of an id: "vino_1_12" -> {1, 12}.
std::vector<long> SenseNumbers(std::string_view id) {
  std::vector<long> numbers;
  std::vector<std::string> parts = Split(id, '_');
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    long value = 0;
    const char *begin = it->data();
    const char *end = begin + it->size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (it->empty() || ec != std::errc() || ptr != end) break;
    numbers.insert(numbers.begin(), value);
  }
  return numbers;
}

}  // namespace

bool SenseNumberLess(std::string_view a, std::string_view b) {
  std::vector<long> na = SenseNumbers(a);
  std::vector<long> nb = SenseNumbers(b);
  if (na != nb) {
    if (na.empty()) return false;
    if (nb.empty()) return true;
    return na < nb;
  }
  return a < b;
}

Dictionary ParseSenseFile(std::istream &in, const GenusSkipList &skip) {
  std::vector<Sense> senses;
  std::map<std::string, int, std::less<>> first_line;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error &e) {
      throw DataError(line_number, "malformed JSON");
    }
    if (!obj.is_object()) throw DataError(line_number, "expected an object");

    Sense sense;
    sense.headword = Lowercase(Trim(RequireString(obj, "headword", line_number)));
    sense.sense_id = std::string(Trim(RequireString(obj, "sense_id", line_number)));
    sense.pos = std::string(Trim(RequireString(obj, "pos", line_number)));
    sense.definition_tokens =
        Tokenize(RequireString(obj, "definition", line_number));
    if (sense.headword.empty()) throw DataError(line_number, "empty headword");
    if (sense.sense_id.empty()) throw DataError(line_number, "empty sense_id");
    if (sense.definition_tokens.empty()) {
      throw DataError(line_number, "definition has no word forms");
    }
    auto genus = obj.find("genus");
    if (genus != obj.end() && !genus->is_null()) {
      if (!genus->is_string()) {
        throw DataError(line_number, "field \"genus\" is not a string");
      }
      std::string g = Lowercase(Trim(genus->get<std::string>()));
      if (!g.empty()) sense.genus = g;
    } else {
      sense.genus = ExtractGenus(sense.definition_tokens, skip);
    }

    auto [it, inserted] = first_line.emplace(sense.sense_id, line_number);
    if (!inserted) {
      throw DataError(line_number, "duplicate sense_id \"" + sense.sense_id +
                                       "\" (first seen on line " +
                                       std::to_string(it->second) + ")");
    }
    senses.push_back(std::move(sense));
  }
  if (senses.empty()) throw DataError("empty dictionary");
  return Dictionary::FromSenses(std::move(senses));
}

void WriteSenseFile(const Dictionary &dict, std::ostream &out) {
  for (const Sense &sense : dict.senses()) {
    json obj;
    obj["headword"] = sense.headword;
    obj["sense_id"] = sense.sense_id;
    obj["pos"] = sense.pos;
    obj["definition"] = Join(sense.definition_tokens, " ");
    // An empty genus reads back as "no genus" without re-extraction.
    obj["genus"] = sense.genus.value_or("");
    out << obj.dump() << '\n';
  }
}

DictionaryCounts CountDictionary(const Dictionary &dict) {
  DictionaryCounts counts;
  std::set<std::string_view> genus_terms;
  std::set<std::string_view> headwords;
  for (const Sense &sense : dict.senses()) {
    if (sense.pos != kNounPos) continue;
    ++counts.definitions;
    headwords.insert(sense.headword);
    if (sense.genus) {
      ++counts.definitions_with_genus;
      genus_terms.insert(*sense.genus);
    }
  }
  counts.genus_terms = static_cast<int64_t>(genus_terms.size());
  counts.headwords = static_cast<int64_t>(headwords.size());
  return counts;
}

// ---------------------------------------------------------------------------
// Semantic net

namespace {

std::vector<std::string> SplitList(std::string_view text) {
  std::vector<std::string> items;
  if (Trim(text).empty()) return items;
  for (const std::string &part : Split(text, ',')) {
    std::string_view item = Trim(part);
    if (!item.empty()) items.emplace_back(item);
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

// Finds one hypernym cycle, rotated to start at its smallest concept.
std::vector<ConceptIndex> FindCycle(
    const std::vector<std::vector<ConceptIndex>> &parents) {
  const size_t n = parents.size();
  std::vector<uint8_t> color(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<ConceptIndex> stack;
  std::vector<size_t> next_edge;
  for (ConceptIndex start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    stack.assign(1, start);
    next_edge.assign(1, 0);
    color[start] = 1;
    while (!stack.empty()) {
      ConceptIndex node = stack.back();
      if (next_edge.back() == parents[node].size()) {
        color[node] = 2;
        stack.pop_back();
        next_edge.pop_back();
        continue;
      }
      ConceptIndex parent = parents[node][next_edge.back()++];
      if (color[parent] == 1) {
        auto from = std::find(stack.begin(), stack.end(), parent);
        std::vector<ConceptIndex> cycle(from, stack.end());
        std::rotate(cycle.begin(),
                    std::min_element(cycle.begin(), cycle.end()), cycle.end());
        return cycle;
      }
      if (color[parent] == 0) {
        color[parent] = 1;
        stack.push_back(parent);
        next_edge.push_back(0);
      }
    }
  }
  return {};
}

}  // namespace

SemanticNet SemanticNet::Build(std::vector<Concept> concepts) {
  SemanticNet net;
  std::sort(concepts.begin(), concepts.end(),
            [](const Concept &a, const Concept &b) { return a.id < b.id; });
  for (size_t i = 1; i < concepts.size(); ++i) {
    if (concepts[i].id == concepts[i - 1].id) {
      throw DataError("duplicate concept id " + concepts[i].id);
    }
  }
  net.concepts_ = std::move(concepts);
  const size_t n = net.concepts_.size();
  net.parents_.resize(n);
  net.children_.resize(n);
  for (ConceptIndex i = 0; i < n; ++i) {
    Concept &c = net.concepts_[i];
    std::sort(c.lemmas.begin(), c.lemmas.end());
    c.lemmas.erase(std::unique(c.lemmas.begin(), c.lemmas.end()),
                   c.lemmas.end());
    std::sort(c.hypernyms.begin(), c.hypernyms.end());
    c.hypernyms.erase(std::unique(c.hypernyms.begin(), c.hypernyms.end()),
                      c.hypernyms.end());
    if (c.lemmas.empty()) throw DataError("concept " + c.id + " has no lemmas");
    for (const std::string &h : c.hypernyms) {
      std::optional<ConceptIndex> parent = net.Find(h);
      if (!parent) {
        throw DataError("concept " + c.id + " references unknown hypernym " +
                        h);
      }
      net.parents_[i].push_back(*parent);
      net.children_[*parent].push_back(i);
    }
    for (const std::string &lemma : c.lemmas) net.lemma_index_[lemma].push_back(i);
  }
  std::vector<ConceptIndex> cycle = FindCycle(net.parents_);
  if (!cycle.empty()) {
    std::vector<std::string> ids;
    for (ConceptIndex c : cycle) ids.push_back(net.concepts_[c].id);
    throw DataError("hypernym cycle: [" + Join(ids, ", ") + "]");
  }
  std::vector<int> depths = ComputeDepths(net.parents_);
  for (ConceptIndex i = 0; i < n; ++i) net.concepts_[i].depth = depths[i];
  return net;
}

std::optional<ConceptIndex> SemanticNet::Find(std::string_view id) const {
  auto it = std::lower_bound(
      concepts_.begin(), concepts_.end(), id,
      [](const Concept &c, std::string_view key) { return c.id < key; });
  if (it == concepts_.end() || it->id != id) return std::nullopt;
  return static_cast<ConceptIndex>(it - concepts_.begin());
}

ConceptIndex SemanticNet::Require(std::string_view id) const {
  std::optional<ConceptIndex> index = Find(id);
  if (!index) throw DataError("unknown concept id " + std::string(id));
  return *index;
}

std::span<const ConceptIndex> SemanticNet::ConceptsOfLemma(
    std::string_view lemma) const {
  auto it = lemma_index_.find(lemma);
  if (it == lemma_index_.end()) return {};
  return it->second;
}

std::vector<std::string> SemanticNet::SemanticFiles() const {
  std::set<std::string> files;
  for (const Concept &c : concepts_) files.insert(c.semantic_file);
  return {files.begin(), files.end()};
}

SemanticNet ParseSemanticNet(std::istream &in) {
  std::vector<Concept> concepts;
  ForEachTsvLine(in, [&](int line, const std::vector<std::string> &fields) {
    if (fields.size() != 4) {
      throw DataError(line, "expected 4 tab-separated fields, got " +
                                std::to_string(fields.size()));
    }
    Concept c;
    c.id = std::string(Trim(fields[0]));
    c.semantic_file = std::string(Trim(fields[1]));
    c.lemmas = SplitList(fields[2]);
    c.hypernyms = SplitList(fields[3]);
    if (c.id.empty()) throw DataError(line, "empty concept id");
    if (c.semantic_file.empty()) throw DataError(line, "empty semantic file");
    if (c.lemmas.empty()) throw DataError(line, "concept " + c.id + " has no lemmas");
    concepts.push_back(std::move(c));
  });
  if (concepts.empty()) throw DataError("empty semantic net");
  return SemanticNet::Build(std::move(concepts));
}

void WriteSemanticNet(const SemanticNet &net, std::ostream &out) {
  for (const Concept &c : net.concepts()) {
    out << c.id << '\t' << c.semantic_file << '\t' << Join(c.lemmas, ",")
        << '\t' << Join(c.hypernyms, ",") << '\n';
  }
}

// ---------------------------------------------------------------------------
// Bilingual map

void BilingualMap::Add(std::string_view source, std::string_view target) {
  entries_[Lowercase(source)].insert(std::string(target));
}

const std::set<std::string> *BilingualMap::Targets(
    std::string_view source) const {
  auto it = entries_.find(source);
  return it == entries_.end() ? nullptr : &it->second;
}

BilingualMap ParseBilingual(std::istream &in) {
  BilingualMap map;
  ForEachTsvLine(in, [&](int line, const std::vector<std::string> &fields) {
    if (fields.size() != 2) {
      throw DataError(line, "expected 2 tab-separated fields, got " +
                                std::to_string(fields.size()));
    }
    std::string_view source = Trim(fields[0]);
    std::string_view target = Trim(fields[1]);
    if (source.empty()) throw DataError(line, "empty source field");
    if (target.empty()) throw DataError(line, "empty target field");
    map.Add(source, target);
  });
  return map;
}

void WriteBilingual(const BilingualMap &map, std::ostream &out) {
  for (const auto &[source, targets] : map.entries()) {
    for (const std::string &target : targets) {
      out << source << '\t' << target << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// Stopwords

StopwordList::StopwordList(const std::vector<std::string> &words) {
  for (const std::string &w : words) {
    std::string word = Lowercase(Trim(w));
    if (!word.empty()) words_.insert(std::move(word));
  }
}

StopwordList StopwordList::Parse(std::istream &in) {
  std::vector<std::string> words;
  ForEachTsvLine(in, [&](int, const std::vector<std::string> &fields) {
    words.push_back(fields[0]);
  });
  return StopwordList(words);
}

}  // namespace lextax
