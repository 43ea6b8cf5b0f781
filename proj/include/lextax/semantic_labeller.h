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

// Salience labelling: a definition's score for class c is the sum of AR(w, c)
// over its content tokens, with multiplicity; the highest-scoring class wins,
// ties going to the smaller class name. The train/label loop can be repeated,
// each round training on the previous round's labels.

#ifndef LEXTAX_SEMANTIC_LABELLER_H_
#define LEXTAX_SEMANTIC_LABELLER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lextax/labels.h"
#include "lextax/lexicon.h"
#include "lextax/parallel.h"
#include "lextax/primary_labeller.h"
#include "lextax/salience.h"

namespace lextax {

struct ClassScoreVector {
  std::vector<double> scores;     // aligned with SalienceTable::classes()
  std::optional<uint32_t> winner;  // absent iff every score is 0
  double margin = 0.0;            // winner minus runner-up
  bool tie = false;               // several classes share the top score

  bool operator==(const ClassScoreVector &other) const = default;
};

ClassScoreVector ScoreDefinition(std::span<const std::string> tokens,
                                 const SalienceTable &table);

struct HistogramRow {
  std::string cls;
  int64_t senses = 0;

  bool operator==(const HistogramRow &other) const = default;
};

struct SecondPassResult {
  LabelledCorpus labels;                // dictionary order
  std::vector<HistogramRow> histogram;  // by class name
  std::vector<std::string> unlabelled;  // noun senses without a winner
  int64_t definitions = 0;              // noun senses scored
  int64_t ties = 0;

  double coverage() const {
    return definitions == 0 ? 0.0
                            : static_cast<double>(labels.size()) /
                                  static_cast<double>(definitions);
  }
};

// Scores every noun sense. Stopwords are removed before scoring. Labels carry
// `round` (1 for the second pass).
SecondPassResult RunSecondPass(const Dictionary &dict,
                               const SalienceTable &table,
                               const StopwordList &stopwords, int round = 1,
                               Execution execution = Execution::kParallel);

struct LabellingRound {
  int round = 0;
  std::optional<SalienceTable> table;  // absent for round 0
  LabelledCorpus labels;
  std::vector<HistogramRow> histogram;
  int64_t definitions = 0;
  int64_t ties = 0;
  // Senses whose tag (or lack of one) differs from the previous round.
  int64_t changed = 0;
  bool fixpoint = false;  // changed == 0

  double coverage() const {
    return definitions == 0 ? 0.0
                            : static_cast<double>(labels.size()) /
                                  static_cast<double>(definitions);
  }
};

// Round 0 is the distance labelling; rounds 1..`rounds` each train on the
// previous round and relabel the dictionary.
std::vector<LabellingRound> IterateLabelling(
    const Dictionary &dict, const SemanticNet &net,
    const BilingualMap &bilingual, const StopwordList &stopwords, int rounds,
    Execution execution = Execution::kParallel);

// Same loop starting from an existing first-pass result.
std::vector<LabellingRound> IterateFrom(const Dictionary &dict,
                                        const FirstPassResult &first,
                                        const StopwordList &stopwords,
                                        int rounds,
                                        Execution execution =
                                            Execution::kParallel);

// Histogram of a labelled corpus by class name.
std::vector<HistogramRow> Histogram(const LabelledCorpus &labels);

// Senses (over `dict` noun senses) whose tag differs between two corpora.
int64_t CountChangedLabels(const Dictionary &dict, const LabelledCorpus &a,
                           const LabelledCorpus &b);

}  // namespace lextax

#endif  // LEXTAX_SEMANTIC_LABELLER_H_
