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

#include "lextax/taxonomy.h"

#include <algorithm>
#include <deque>
#include <exception>

#include "json.hpp"
#include "lextax/errors.h"
#include "lextax/primary_labeller.h"
#include "lextax/text.h"

namespace lextax {

using json = nlohmann::ordered_json;

GenusStrategy ParseGenusStrategy(std::string_view name) {
  if (name == "first-sense") return GenusStrategy::kFirstSense;
  if (name == "conceptual-distance") return GenusStrategy::kConceptualDistance;
  throw UsageError("unknown disambiguation strategy \"" + std::string(name) +
                   "\" (expected first-sense or conceptual-distance)");
}

std::string GenusStrategyName(GenusStrategy strategy) {
  return strategy == GenusStrategy::kFirstSense ? "first-sense"
                                                : "conceptual-distance";
}

// ---------------------------------------------------------------------------
// Genus sense disambiguation

GenusDisambiguator::GenusDisambiguator(const Dictionary &dict,
                                       const SemanticNet &net,
                                       const BilingualMap &bilingual,
                                       GenusStrategy strategy)
    : dict_(dict),
      net_(net),
      bilingual_(bilingual),
      strategy_(strategy),
      prototype_(net) {
  if (strategy_ != GenusStrategy::kConceptualDistance) return;
  FirstPassResult first = RunFirstPass(dict, net, bilingual);
  for (const LabelledSense &label : first.labels) {
    const auto &evidence = std::get<DistanceEvidence>(label.evidence);
    chosen_[label.sense_id] = net.Require(evidence.headword_concept);
  }
}

std::vector<ConceptIndex> GenusDisambiguator::SenseConcepts(
    const Sense &sense) const {
  auto it = chosen_.find(sense.sense_id);
  if (it != chosen_.end()) return {it->second};
  return TranslateToConcepts(sense.headword, bilingual_, net_);
}

std::optional<std::string> GenusDisambiguator::Disambiguate(
    const Sense &sense) const {
  PathSearcher searcher(prototype_);
  return Disambiguate(sense, searcher);
}

std::optional<std::string> GenusDisambiguator::Disambiguate(
    const Sense &sense, PathSearcher &searcher) const {
  if (!sense.genus) return std::nullopt;
  const std::vector<std::string> *senses = dict_.SensesOf(*sense.genus);
  if (senses == nullptr) return std::nullopt;
  std::vector<std::string> candidates;
  for (const std::string &id : *senses) {
    if (id != sense.sense_id) candidates.push_back(id);
  }
  if (candidates.empty()) return std::nullopt;

  if (strategy_ == GenusStrategy::kFirstSense) {
    return *std::min_element(candidates.begin(), candidates.end(),
                             SenseNumberLess);
  }

  std::vector<ConceptIndex> hyponym =
      TranslateToConcepts(sense.headword, bilingual_, net_);
  if (hyponym.empty()) return std::nullopt;
  std::sort(candidates.begin(), candidates.end());
  std::optional<std::string> best;
  double best_distance = 0.0;
  for (const std::string &id : candidates) {
    std::vector<ConceptIndex> concepts = SenseConcepts(*dict_.Find(id));
    if (concepts.empty()) continue;
    std::optional<DistanceResult> d = searcher.Distance(hyponym, concepts);
    if (!d) continue;
    if (!best || d->distance < best_distance) {
      best = id;
      best_distance = d->distance;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Pairs

PairCollection CollectPairs(const LabelledCorpus &labels,
                            const GenusSelection &selection,
                            const Dictionary &dict,
                            const GenusDisambiguator &disambiguator,
                            Execution execution) {
  std::vector<const Sense *> senses;
  for (const LabelledSense &label : labels) {
    if (label.tag != selection.cls) continue;
    const Sense *sense = dict.Find(label.sense_id);
    if (sense == nullptr) {
      throw DataError("labelled sense " + label.sense_id +
                      " is not in the dictionary");
    }
    if (!sense->genus || !selection.selected.count(*sense->genus)) continue;
    senses.push_back(sense);
  }

  enum class Outcome : uint8_t { kPair, kUnresolved, kSelfLoop };
  std::vector<Outcome> outcomes(senses.size(), Outcome::kUnresolved);
  std::vector<std::string> hypernyms(senses.size());
  auto resolve = [&](size_t i, PathSearcher &searcher) {
    const Sense &sense = *senses[i];
    const std::vector<std::string> *candidates = dict.SensesOf(*sense.genus);
    if (candidates != nullptr && candidates->size() == 1 &&
        candidates->front() == sense.sense_id) {
      outcomes[i] = Outcome::kSelfLoop;
      return;
    }
    std::optional<std::string> target =
        disambiguator.Disambiguate(sense, searcher);
    if (!target) return;
    if (*target == sense.sense_id) {
      outcomes[i] = Outcome::kSelfLoop;
      return;
    }
    outcomes[i] = Outcome::kPair;
    hypernyms[i] = std::move(*target);
  };

  if (execution == Execution::kSerial) {
    PathSearcher searcher(disambiguator.prototype());
    for (size_t i = 0; i < senses.size(); ++i) resolve(i, searcher);
  } else {
    std::exception_ptr failure;
#pragma omp parallel
    {
      PathSearcher searcher(disambiguator.prototype());
#pragma omp for schedule(dynamic, 8)
      for (size_t i = 0; i < senses.size(); ++i) {
        try {
          resolve(i, searcher);
        } catch (...) {
#pragma omp critical(lextax_pairs_failure)
          if (!failure) failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  PairCollection collection;
  for (size_t i = 0; i < senses.size(); ++i) {
    switch (outcomes[i]) {
      case Outcome::kPair:
        collection.pairs.push_back({senses[i]->sense_id, hypernyms[i]});
        break;
      case Outcome::kUnresolved:
        collection.unresolved.push_back(senses[i]->sense_id);
        break;
      case Outcome::kSelfLoop:
        collection.self_loops.push_back(senses[i]->sense_id);
        break;
    }
  }
  return collection;
}

// ---------------------------------------------------------------------------
// Assembly

int64_t Taxonomy::edges() const {
  int64_t n = 0;
  for (const auto &[id, node] : nodes) {
    if (node.hypernym) ++n;
  }
  return n;
}

namespace {

// Rebuilds children, tops and levels from the hypernym links.
void Relink(Taxonomy &taxonomy) {
  taxonomy.tops.clear();
  for (auto &[id, node] : taxonomy.nodes) node.children.clear();
  for (auto &[id, node] : taxonomy.nodes) {
    if (node.hypernym) {
      taxonomy.nodes.at(*node.hypernym).children.insert(id);
    } else {
      taxonomy.tops.insert(id);
    }
  }
  std::deque<std::string> queue;
  for (const std::string &top : taxonomy.tops) {
    taxonomy.nodes.at(top).level = 1;
    queue.push_back(top);
  }
  size_t reached = 0;
  while (!queue.empty()) {
    const TaxonomyNode &node = taxonomy.nodes.at(queue.front());
    queue.pop_front();
    ++reached;
    for (const std::string &child : node.children) {
      taxonomy.nodes.at(child).level = node.level + 1;
      queue.push_back(child);
    }
  }
  if (reached != taxonomy.nodes.size()) {
    throw InvariantError("taxonomy has nodes unreachable from any top");
  }
}

}  // namespace

Taxonomy BuildTaxonomy(std::span<const HypernymPair> pairs,
                       const std::string &cls) {
  Taxonomy taxonomy;
  taxonomy.cls = cls;
  for (const HypernymPair &pair : pairs) {
    taxonomy.nodes[pair.hyponym].sense_id = pair.hyponym;
    taxonomy.nodes[pair.hypernym].sense_id = pair.hypernym;
  }

  // First hypernym wins.
  std::map<std::string, std::string> parent;
  for (const HypernymPair &pair : pairs) {
    if (pair.hyponym == pair.hypernym) {
      taxonomy.self_loop_pairs.push_back(pair);
    } else if (parent.count(pair.hyponym)) {
      taxonomy.duplicate_pairs.push_back(pair);
    } else {
      parent[pair.hyponym] = pair.hypernym;
    }
  }

  // Each node has at most one parent, so cycles are disjoint; find them all
  // before cutting any.
  std::map<std::string, int> color;  // 0 new, 1 on current walk, 2 done
  std::vector<std::vector<std::string>> cycles;
  for (const auto &[start, node] : taxonomy.nodes) {
    if (color[start] != 0) continue;
    std::vector<std::string> walk;
    std::string current = start;
    while (true) {
      int &c = color[current];
      if (c == 2) break;
      if (c == 1) {
        auto from = std::find(walk.begin(), walk.end(), current);
        std::vector<std::string> cycle(from, walk.end());
        std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                    cycle.end());
        cycles.push_back(std::move(cycle));
        break;
      }
      c = 1;
      walk.push_back(current);
      auto p = parent.find(current);
      if (p == parent.end()) break;
      current = p->second;
    }
    for (const std::string &id : walk) color[id] = 2;
  }
  std::sort(cycles.begin(), cycles.end());
  for (const auto &cycle : cycles) {
    const std::string &cut = *std::max_element(cycle.begin(), cycle.end());
    taxonomy.cycle_pairs.push_back({cut, parent.at(cut)});
    parent.erase(cut);
    taxonomy.dropped_cycles.push_back(cycle);
  }

  for (const auto &[child, hypernym] : parent) {
    taxonomy.nodes.at(child).hypernym = hypernym;
  }
  Relink(taxonomy);
  return taxonomy;
}

AttachmentOutcome ApplyAttachments(Taxonomy &taxonomy,
                                   std::span<const HypernymPair> attachments) {
  AttachmentOutcome outcome;
  for (const HypernymPair &a : attachments) {
    auto node = taxonomy.nodes.find(a.hyponym);
    if (node == taxonomy.nodes.end() || node->second.hypernym ||
        a.hyponym == a.hypernym) {
      outcome.skipped.push_back(a);
      continue;
    }
    // Refuse parents inside the top's own subtree.
    bool inside = false;
    for (auto p = taxonomy.nodes.find(a.hypernym); p != taxonomy.nodes.end();) {
      if (p->first == a.hyponym) {
        inside = true;
        break;
      }
      if (!p->second.hypernym) break;
      p = taxonomy.nodes.find(*p->second.hypernym);
    }
    if (inside) {
      outcome.skipped.push_back(a);
      continue;
    }
    taxonomy.nodes[a.hypernym].sense_id = a.hypernym;
    taxonomy.nodes.at(a.hyponym).hypernym = a.hypernym;
    outcome.applied.push_back(a);
  }
  Relink(taxonomy);
  return outcome;
}

std::vector<HypernymPair> ParseAttachments(std::istream &in) {
  std::vector<HypernymPair> attachments;
  ForEachTsvLine(in, [&](int line, const std::vector<std::string> &fields) {
    if (fields.size() != 2 || Trim(fields[0]).empty() ||
        Trim(fields[1]).empty()) {
      throw DataError(line, "expected \"top_sense_id<TAB>parent_sense_id\"");
    }
    attachments.push_back(
        {std::string(Trim(fields[0])), std::string(Trim(fields[1]))});
  });
  return attachments;
}

// ---------------------------------------------------------------------------
// Statistics and export

TaxonomyStats ComputeStats(const Taxonomy &taxonomy, const Dictionary *dict) {
  TaxonomyStats stats;
  stats.senses = static_cast<int64_t>(taxonomy.nodes.size());
  stats.tops = static_cast<int64_t>(taxonomy.tops.size());
  std::set<std::string> genus;
  for (const auto &[id, node] : taxonomy.nodes) {
    stats.levels = std::max(stats.levels, node.level);
    if (static_cast<int>(stats.per_level.size()) < node.level) {
      stats.per_level.resize(node.level, 0);
    }
    ++stats.per_level[node.level - 1];
    if (node.children.empty()) continue;
    const Sense *sense = dict ? dict->Find(id) : nullptr;
    genus.insert(sense ? sense->headword : id.substr(0, id.find('_')));
  }
  stats.genus_terms = static_cast<int64_t>(genus.size());
  return stats;
}

ExportFormat ParseExportFormat(std::string_view name) {
  if (name == "json") return ExportFormat::kJson;
  if (name == "dot") return ExportFormat::kDot;
  if (name == "text") return ExportFormat::kText;
  throw UsageError("unknown export format \"" + std::string(name) +
                   "\" (expected json, dot or text)");
}

namespace {

json PairsJson(const std::vector<HypernymPair> &pairs) {
  json out = json::array();
  for (const HypernymPair &p : pairs) out.push_back({p.hyponym, p.hypernym});
  return out;
}

std::string DotQuote(const std::string &id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void WriteTextTree(const Taxonomy &taxonomy, const std::string &id, int depth,
                   std::ostream &out) {
  out << std::string(2 * depth, ' ') << id << '\n';
  for (const std::string &child : taxonomy.nodes.at(id).children) {
    WriteTextTree(taxonomy, child, depth + 1, out);
  }
}

std::vector<HypernymPair> ParsePairs(const json &array) {
  std::vector<HypernymPair> pairs;
  for (const json &p : array) {
    pairs.push_back({p.at(0).get<std::string>(), p.at(1).get<std::string>()});
  }
  return pairs;
}

}  // namespace

void ExportTaxonomy(const Taxonomy &taxonomy, ExportFormat format,
                    std::ostream &out) {
  switch (format) {
    case ExportFormat::kJson: {
      json obj;
      obj["class"] = taxonomy.cls;
      obj["tops"] = json::array();
      for (const std::string &top : taxonomy.tops) obj["tops"].push_back(top);
      obj["nodes"] = json::array();
      for (const auto &[id, node] : taxonomy.nodes) {
        json n;
        n["sense_id"] = id;
        n["hypernym"] = node.hypernym ? json(*node.hypernym) : json(nullptr);
        n["level"] = node.level;
        n["children"] = json::array();
        for (const std::string &c : node.children) n["children"].push_back(c);
        obj["nodes"].push_back(std::move(n));
      }
      obj["dropped_cycles"] = json::array();
      for (const auto &cycle : taxonomy.dropped_cycles) {
        obj["dropped_cycles"].push_back(cycle);
      }
      obj["cycle_pairs"] = PairsJson(taxonomy.cycle_pairs);
      obj["duplicate_pairs"] = PairsJson(taxonomy.duplicate_pairs);
      obj["self_loop_pairs"] = PairsJson(taxonomy.self_loop_pairs);
      out << obj.dump(2) << '\n';
      break;
    }
    case ExportFormat::kDot:
      out << "digraph " << DotQuote(taxonomy.cls) << " {\n";
      for (const auto &[id, node] : taxonomy.nodes) {
        out << "  " << DotQuote(id) << ";\n";
      }
      for (const auto &[id, node] : taxonomy.nodes) {
        if (node.hypernym) {
          out << "  " << DotQuote(id) << " -> " << DotQuote(*node.hypernym)
              << ";\n";
        }
      }
      out << "}\n";
      break;
    case ExportFormat::kText:
      for (const std::string &top : taxonomy.tops) {
        WriteTextTree(taxonomy, top, 0, out);
      }
      break;
  }
}

Taxonomy ParseTaxonomyJson(std::istream &in) {
  Taxonomy taxonomy;
  try {
    json obj = json::parse(in);
    taxonomy.cls = obj.at("class").get<std::string>();
    for (const json &n : obj.at("nodes")) {
      TaxonomyNode node;
      node.sense_id = n.at("sense_id").get<std::string>();
      if (!n.at("hypernym").is_null()) {
        node.hypernym = n.at("hypernym").get<std::string>();
      }
      node.level = n.at("level").get<int>();
      for (const json &c : n.at("children")) {
        node.children.insert(c.get<std::string>());
      }
      std::string id = node.sense_id;
      if (!taxonomy.nodes.emplace(id, std::move(node)).second) {
        throw DataError("duplicate taxonomy node " + id);
      }
    }
    for (const json &t : obj.at("tops")) taxonomy.tops.insert(t.get<std::string>());
    for (const json &cycle : obj.at("dropped_cycles")) {
      taxonomy.dropped_cycles.push_back(cycle.get<std::vector<std::string>>());
    }
    taxonomy.cycle_pairs = ParsePairs(obj.at("cycle_pairs"));
    taxonomy.duplicate_pairs = ParsePairs(obj.at("duplicate_pairs"));
    taxonomy.self_loop_pairs = ParsePairs(obj.at("self_loop_pairs"));
  } catch (const json::exception &e) {
    throw DataError(std::string("malformed taxonomy: ") + e.what());
  }
  try {
    CheckTaxonomy(taxonomy);
  } catch (const InvariantError &e) {
    throw DataError(std::string("inconsistent taxonomy: ") + e.what());
  }
  return taxonomy;
}

void CheckTaxonomy(const Taxonomy &taxonomy) {
  for (const auto &[id, node] : taxonomy.nodes) {
    if (node.sense_id != id) throw InvariantError("node id mismatch at " + id);
    if (node.hypernym) {
      auto parent = taxonomy.nodes.find(*node.hypernym);
      if (parent == taxonomy.nodes.end()) {
        throw InvariantError(id + " has unknown hypernym " + *node.hypernym);
      }
      if (!parent->second.children.count(id)) {
        throw InvariantError(id + " missing from its hypernym's children");
      }
      if (node.level != parent->second.level + 1) {
        throw InvariantError("level of " + id + " is not parent level + 1");
      }
      if (taxonomy.tops.count(id)) {
        throw InvariantError(id + " is a top but has a hypernym");
      }
    } else {
      if (node.level != 1) throw InvariantError("top " + id + " not at level 1");
      if (!taxonomy.tops.count(id)) throw InvariantError(id + " missing from tops");
    }
    for (const std::string &child : node.children) {
      auto c = taxonomy.nodes.find(child);
      if (c == taxonomy.nodes.end() || c->second.hypernym != id) {
        throw InvariantError("child link " + id + " -> " + child + " is broken");
      }
    }
  }
  for (const std::string &top : taxonomy.tops) {
    if (!taxonomy.nodes.count(top)) throw InvariantError("unknown top " + top);
  }
  // Levels strictly increase along hypernym links and tops sit at level 1,
  // so every node is below a top and no node is its own ancestor.
}

}  // namespace lextax
