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

// Brute-force reference for depths and depth-weighted distances. Depths come
// from enumerating every upward path to a root; distances from a depth-first
// enumeration of simple paths in the undirected hypernym graph, with exact
// rational costs.

#ifndef LEXTAX_TESTS_ORACLES_GRAPH_ORACLE_H_
#define LEXTAX_TESTS_ORACLES_GRAPH_ORACLE_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lextax/lexicon.h"

namespace lextax::oracle {

using Rational = boost::multiprecision::cpp_rational;

struct Graph {
  std::vector<std::string> ids;  // sorted
  std::vector<std::string> files;
  std::vector<std::vector<int>> parents;
  std::vector<std::vector<int>> neighbors;  // parents and children, sorted
  std::vector<int> depth;
};

// Builds the graph from concept records, ignoring any stored depth.
Graph MakeGraph(const std::vector<Concept> &concepts);

// Graph over nodes 0..n-1 named "n000", "n001", ... from parent lists.
Graph MakeGraph(const std::vector<std::vector<int>> &parents);

int IndexOf(const Graph &graph, const std::string &id);

// Minimum number of nodes on any upward path to a root, by enumeration.
std::vector<int> EnumeratedDepths(const std::vector<std::vector<int>> &parents);

struct Path {
  std::vector<int> nodes;
  Rational cost;
  double cost_double() const { return cost.convert_to<double>(); }
};

// Cheapest simple path; equal costs go to the lexicographically smallest
// node sequence.
std::optional<Path> ShortestPath(const Graph &graph, int from, int to);

struct Distance {
  int first = -1;
  int second = -1;
  Path path;
};

// Cheapest pair over first x second; equal costs go to the smallest pair.
std::optional<Distance> MinDistance(const Graph &graph,
                                    const std::vector<int> &first,
                                    const std::vector<int> &second);

}  // namespace lextax::oracle

#endif  // LEXTAX_TESTS_ORACLES_GRAPH_ORACLE_H_
