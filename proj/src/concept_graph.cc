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

#include "lextax/concept_graph.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "lextax/errors.h"

namespace lextax {

namespace {

using Cost = unsigned __int128;

constexpr Cost kInfinite = ~static_cast<Cost>(0);

Cost Gcd(Cost a, Cost b) {
  while (b != 0) {
    Cost t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<ConceptIndex> SortedUnique(std::span<const ConceptIndex> items) {
  std::vector<ConceptIndex> out(items.begin(), items.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<int> ComputeDepths(
    std::span<const std::vector<ConceptIndex>> parents) {
  const size_t n = parents.size();
  std::vector<std::vector<ConceptIndex>> children(n);
  std::vector<size_t> pending(n);
  for (ConceptIndex c = 0; c < n; ++c) {
    pending[c] = parents[c].size();
    for (ConceptIndex p : parents[c]) children[p].push_back(c);
  }

  // Kahn's order: a concept is final once all of its parents are.
  std::vector<int> depth(n, 0);
  std::vector<ConceptIndex> ready;
  for (ConceptIndex c = 0; c < n; ++c) {
    if (pending[c] == 0) {
      depth[c] = 1;
      ready.push_back(c);
    }
  }
  size_t done = 0;
  while (!ready.empty()) {
    ConceptIndex c = ready.back();
    ready.pop_back();
    ++done;
    for (ConceptIndex child : children[c]) {
      int candidate = depth[c] + 1;
      if (depth[child] == 0 || candidate < depth[child]) depth[child] = candidate;
      if (--pending[child] == 0) ready.push_back(child);
    }
  }
  if (done != n) throw InvariantError("hypernym graph contains a cycle");
  return depth;
}

std::vector<int> ComputeDepths(const SemanticNet &net) {
  std::vector<std::vector<ConceptIndex>> parents(net.size());
  for (ConceptIndex c = 0; c < net.size(); ++c) {
    auto p = net.parents(c);
    parents[c].assign(p.begin(), p.end());
  }
  return ComputeDepths(parents);
}

PathSearcher::PathSearcher(const SemanticNet &net) : net_(net) {
  const size_t n = net.size();
  const Cost limit = (kInfinite >> 1) / static_cast<Cost>(n + 1);
  std::vector<int> depths;
  for (const Concept &c : net.concepts()) depths.push_back(c.depth);
  std::sort(depths.begin(), depths.end());
  depths.erase(std::unique(depths.begin(), depths.end()), depths.end());
  for (int d : depths) {
    if (d < 1) throw InvariantError("concept depth below 1");
    Cost g = Gcd(scale_, static_cast<Cost>(d));
    Cost factor = static_cast<Cost>(d) / g;
    if (scale_ > limit / factor) {
      throw DataError(
          "semantic net too deep for exact path costs (lcm of depths "
          "overflows)");
    }
    scale_ *= factor;
  }
  weights_.resize(n);
  for (ConceptIndex c = 0; c < n; ++c) {
    weights_[c] = scale_ / static_cast<Cost>(net.node(c).depth);
  }
  dist_.assign(n, kInfinite);
  pred_.assign(n, kNone);
  state_.assign(n, 0);
}

void PathSearcher::Reset() {
  for (ConceptIndex c : touched_) {
    dist_[c] = kInfinite;
    pred_[c] = kNone;
    state_[c] = 0;
  }
  touched_.clear();
}

std::vector<ConceptIndex> PathSearcher::PathTo(ConceptIndex target) const {
  std::vector<ConceptIndex> path;
  for (ConceptIndex c = target; c != kNone; c = pred_[c]) path.push_back(c);
  std::reverse(path.begin(), path.end());
  return path;
}

bool PathSearcher::PathLess(ConceptIndex a, ConceptIndex b) const {
  std::vector<ConceptIndex> pa = PathTo(a);
  std::vector<ConceptIndex> pb = PathTo(b);
  return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(),
                                      pb.end());
}

void PathSearcher::Run(ConceptIndex source,
                       std::span<const ConceptIndex> targets, Cost bound) {
  Reset();
  // `targets` is sorted and unique.
  size_t remaining = targets.size();
  auto IsTarget = [&](ConceptIndex c) {
    return std::binary_search(targets.begin(), targets.end(), c);
  };

  using Entry = std::pair<Cost, ConceptIndex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
  dist_[source] = weights_[source];
  state_[source] = 1;
  touched_.push_back(source);
  queue.emplace(dist_[source], source);

  while (!queue.empty() && remaining > 0) {
    auto [cost, node] = queue.top();
    queue.pop();
    if (state_[node] == 2 || cost != dist_[node]) continue;
    if (cost > bound) break;
    state_[node] = 2;
    if (IsTarget(node)) --remaining;

    auto relax = [&](ConceptIndex next) {
      if (state_[next] == 2) return;
      Cost candidate = cost + weights_[next];
      if (state_[next] == 0) {
        state_[next] = 1;
        touched_.push_back(next);
      }
      if (candidate < dist_[next]) {
        dist_[next] = candidate;
        pred_[next] = node;
        queue.emplace(candidate, next);
      } else if (candidate == dist_[next] && PathLess(node, pred_[next])) {
        pred_[next] = node;
      }
    };
    for (ConceptIndex p : net_.parents(node)) relax(p);
    for (ConceptIndex c : net_.children(node)) relax(c);
  }
}

WeightedPath PathSearcher::MakePath(const std::vector<ConceptIndex> &nodes,
                                    Cost cost) const {
  WeightedPath path;
  for (ConceptIndex c : nodes) path.concepts.push_back(net_.node(c).id);
  path.cost = static_cast<double>(static_cast<long double>(cost) /
                                  static_cast<long double>(scale_));
  return path;
}

std::optional<WeightedPath> PathSearcher::ShortestPath(ConceptIndex from,
                                                       ConceptIndex to) {
  const ConceptIndex target[] = {to};
  Run(from, target, kInfinite);
  if (state_[to] != 2) return std::nullopt;
  return MakePath(PathTo(to), dist_[to]);
}

std::optional<DistanceResult> PathSearcher::Distance(
    std::span<const ConceptIndex> first, std::span<const ConceptIndex> second) {
  if (first.empty() || second.empty()) {
    throw InvariantError("conceptual distance needs non-empty concept sets");
  }
  std::vector<ConceptIndex> sources = SortedUnique(first);
  std::vector<ConceptIndex> targets = SortedUnique(second);

  Cost best = kInfinite;
  std::optional<DistanceResult> result;
  for (ConceptIndex source : sources) {
    Run(source, targets, best);
    for (ConceptIndex target : targets) {
      if (state_[target] != 2 || dist_[target] >= best) continue;
      best = dist_[target];
      DistanceResult r;
      r.path = MakePath(PathTo(target), best);
      r.distance = r.path.cost;
      r.best_pair = {net_.node(source).id, net_.node(target).id};
      result = std::move(r);
    }
  }
  return result;
}

std::optional<WeightedPath> ShortestWeightedPath(const SemanticNet &net,
                                                 std::string_view from,
                                                 std::string_view to) {
  PathSearcher searcher(net);
  return searcher.ShortestPath(net.Require(from), net.Require(to));
}

std::optional<DistanceResult> ConceptualDistance(
    const SemanticNet &net, const std::vector<std::string> &first,
    const std::vector<std::string> &second) {
  std::vector<ConceptIndex> a, b;
  for (const std::string &id : first) a.push_back(net.Require(id));
  for (const std::string &id : second) b.push_back(net.Require(id));
  PathSearcher searcher(net);
  return searcher.Distance(a, b);
}

}  // namespace lextax
