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

#include "lextax/semantic_labeller.h"

#include <map>

#include "lextax/errors.h"

namespace lextax {

ClassScoreVector ScoreDefinition(std::span<const std::string> tokens,
                                 const SalienceTable &table) {
  ClassScoreVector result;
  result.scores.assign(table.classes().size(), 0.0);
  for (const std::string &token : tokens) {
    for (const SalientEntry &e : table.Lookup(token)) {
      result.scores[e.class_index] += e.score;
    }
  }

  double best = 0.0;
  double runner_up = 0.0;
  for (uint32_t c = 0; c < result.scores.size(); ++c) {
    double s = result.scores[c];
    if (s > best) {
      runner_up = best;
      best = s;
      result.winner = c;
      result.tie = false;
    } else if (s == best && s > 0.0) {
      // Classes are visited in name order, so the first one keeps the win.
      runner_up = s;
      result.tie = true;
    } else if (s > runner_up) {
      runner_up = s;
    }
  }
  if (result.winner) result.margin = best - runner_up;
  return result;
}

namespace {

std::optional<LabelledSense> LabelBySalience(const Sense &sense,
                                             const SalienceTable &table,
                                             const StopwordList &stopwords,
                                             int round, bool &tie) {
  std::vector<std::string> content;
  content.reserve(sense.definition_tokens.size());
  for (const std::string &token : sense.definition_tokens) {
    if (!stopwords.Contains(token)) content.push_back(token);
  }
  ClassScoreVector scores = ScoreDefinition(content, table);
  tie = scores.tie;
  if (!scores.winner) return std::nullopt;

  SalienceEvidence evidence;
  for (uint32_t c = 0; c < scores.scores.size(); ++c) {
    if (scores.scores[c] != 0.0) {
      evidence.scores.emplace_back(table.classes()[c], scores.scores[c]);
    }
  }
  evidence.margin = scores.margin;
  evidence.tie = scores.tie;

  LabelledSense label;
  label.sense_id = sense.sense_id;
  label.tag = table.classes()[*scores.winner];
  label.round = round;
  label.evidence = std::move(evidence);
  return label;
}

}  // namespace

std::vector<HistogramRow> Histogram(const LabelledCorpus &labels) {
  std::map<std::string, int64_t> counts;
  for (const LabelledSense &label : labels) ++counts[label.tag];
  std::vector<HistogramRow> rows;
  for (const auto &[cls, n] : counts) rows.push_back({cls, n});
  return rows;
}

SecondPassResult RunSecondPass(const Dictionary &dict,
                               const SalienceTable &table,
                               const StopwordList &stopwords, int round,
                               Execution execution) {
  std::vector<const Sense *> nouns;
  for (const Sense &sense : dict.senses()) {
    if (sense.pos == kNounPos) nouns.push_back(&sense);
  }

  std::vector<std::optional<LabelledSense>> slots(nouns.size());
  std::vector<uint8_t> ties(nouns.size(), 0);
  auto label_one = [&](size_t i) {
    bool tie = false;
    slots[i] = LabelBySalience(*nouns[i], table, stopwords, round, tie);
    ties[i] = tie ? 1 : 0;
  };
  if (execution == Execution::kSerial) {
    for (size_t i = 0; i < nouns.size(); ++i) label_one(i);
  } else {
#pragma omp parallel for schedule(dynamic, 64)
    for (size_t i = 0; i < nouns.size(); ++i) label_one(i);
  }

  SecondPassResult result;
  result.definitions = static_cast<int64_t>(nouns.size());
  for (size_t i = 0; i < nouns.size(); ++i) {
    if (slots[i]) {
      result.labels.push_back(std::move(*slots[i]));
      result.ties += ties[i];
    } else {
      result.unlabelled.push_back(nouns[i]->sense_id);
    }
  }
  result.histogram = Histogram(result.labels);
  return result;
}

int64_t CountChangedLabels(const Dictionary &dict, const LabelledCorpus &a,
                           const LabelledCorpus &b) {
  std::map<std::string_view, std::string_view> tags_a, tags_b;
  for (const LabelledSense &l : a) tags_a[l.sense_id] = l.tag;
  for (const LabelledSense &l : b) tags_b[l.sense_id] = l.tag;
  int64_t changed = 0;
  for (const Sense &sense : dict.senses()) {
    if (sense.pos != kNounPos) continue;
    auto ia = tags_a.find(sense.sense_id);
    auto ib = tags_b.find(sense.sense_id);
    bool has_a = ia != tags_a.end();
    bool has_b = ib != tags_b.end();
    if (has_a != has_b || (has_a && ia->second != ib->second)) ++changed;
  }
  return changed;
}

std::vector<LabellingRound> IterateFrom(const Dictionary &dict,
                                        const FirstPassResult &first,
                                        const StopwordList &stopwords,
                                        int rounds, Execution execution) {
  if (rounds < 0) throw UsageError("rounds must be non-negative");
  std::vector<LabellingRound> history;
  LabellingRound zero;
  zero.round = 0;
  zero.labels = first.labels;
  zero.histogram = Histogram(first.labels);
  zero.definitions = first.report.definitions;
  history.push_back(std::move(zero));

  for (int r = 1; r <= rounds; ++r) {
    const LabellingRound &previous = history.back();
    LabellingRound next;
    next.round = r;
    next.table = TrainSalience(previous.labels, dict, stopwords, execution);
    SecondPassResult pass =
        RunSecondPass(dict, *next.table, stopwords, r, execution);
    next.labels = std::move(pass.labels);
    next.histogram = std::move(pass.histogram);
    next.definitions = pass.definitions;
    next.ties = pass.ties;
    next.changed = CountChangedLabels(dict, previous.labels, next.labels);
    next.fixpoint = next.changed == 0;
    history.push_back(std::move(next));
  }
  return history;
}

std::vector<LabellingRound> IterateLabelling(
    const Dictionary &dict, const SemanticNet &net,
    const BilingualMap &bilingual, const StopwordList &stopwords, int rounds,
    Execution execution) {
  if (rounds < 1) throw UsageError("rounds must be at least 1");
  FirstPassResult first = RunFirstPass(dict, net, bilingual, execution);
  return IterateFrom(dict, first, stopwords, rounds, execution);
}

}  // namespace lextax
