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

// Depth-weighted paths over the hypernym graph.
//
// The hypernym links are walked in both directions. A path pays 1/depth(c)
// for every concept c it visits, both endpoints included, so the distance
// between a concept and itself is 1/depth(c). The conceptual distance between
// two concept sets is the cheapest path over all cross pairs.
//
// Costs are accumulated exactly as integers over a common denominator (the
// lcm of all depths in the net), which makes ties exact. Ties between paths
// of equal cost go to the lexicographically smallest concept-id sequence;
// ties between pairs go to the smallest (first, second) id pair.

#ifndef LEXTAX_CONCEPT_GRAPH_H_
#define LEXTAX_CONCEPT_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lextax/lexicon.h"

namespace lextax {

// Depth of every node of a DAG given as parent lists: 1 for roots, otherwise
// one more than the shallowest parent. Throws InvariantError on a cycle.
std::vector<int> ComputeDepths(
    std::span<const std::vector<ConceptIndex>> parents);

// Recomputes the depth of every concept of `net`, indexed by ConceptIndex.
std::vector<int> ComputeDepths(const SemanticNet &net);

struct WeightedPath {
  std::vector<std::string> concepts;  // both endpoints included
  double cost = 0.0;

  bool operator==(const WeightedPath &other) const = default;
};

struct DistanceResult {
  double distance = 0.0;
  std::pair<std::string, std::string> best_pair;
  WeightedPath path;

  bool operator==(const DistanceResult &other) const = default;
};

// Reusable shortest-path engine over one net. Holds scratch buffers, so one
// instance must not be used from several threads at once; the net itself is
// only read.
class PathSearcher {
 public:
  // Throws DataError when the lcm of the net's depths is too large for exact
  // integer costs.
  explicit PathSearcher(const SemanticNet &net);

  const SemanticNet &net() const { return net_; }

  // Cheapest path between two concepts, or nothing when they are not
  // connected.
  std::optional<WeightedPath> ShortestPath(ConceptIndex from, ConceptIndex to);

  // Cheapest path over all pairs in first x second. Both sets must be
  // non-empty (InvariantError otherwise). Nothing when no pair is connected.
  std::optional<DistanceResult> Distance(std::span<const ConceptIndex> first,
                                         std::span<const ConceptIndex> second);

  // Exact cost of a concept, in units of 1/scale().
  unsigned __int128 weight(ConceptIndex c) const { return weights_[c]; }
  unsigned __int128 scale() const { return scale_; }

 private:
  // Dijkstra from `source`. Stops once every concept in `targets` (sorted,
  // unique) is settled or the frontier exceeds `bound`.
  void Run(ConceptIndex source, std::span<const ConceptIndex> targets,
           unsigned __int128 bound);
  std::vector<ConceptIndex> PathTo(ConceptIndex target) const;
  bool PathLess(ConceptIndex a, ConceptIndex b) const;
  WeightedPath MakePath(const std::vector<ConceptIndex> &nodes,
                        unsigned __int128 cost) const;
  void Reset();

  const SemanticNet &net_;
  unsigned __int128 scale_ = 1;
  std::vector<unsigned __int128> weights_;

  // Scratch state of the last search.
  static constexpr ConceptIndex kNone = static_cast<ConceptIndex>(-1);
  std::vector<unsigned __int128> dist_;
  std::vector<ConceptIndex> pred_;
  std::vector<uint8_t> state_;  // 0 unseen, 1 queued, 2 settled
  std::vector<ConceptIndex> touched_;
};

// Convenience wrappers; each builds a temporary PathSearcher.
std::optional<WeightedPath> ShortestWeightedPath(const SemanticNet &net,
                                                 std::string_view from,
                                                 std::string_view to);

std::optional<DistanceResult> ConceptualDistance(
    const SemanticNet &net, const std::vector<std::string> &first,
    const std::vector<std::string> &second);

}  // namespace lextax

#endif  // LEXTAX_CONCEPT_GRAPH_H_
