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

#include "lextax/salience.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <set>
#include <unordered_map>

#include "lextax/errors.h"
#include "lextax/text.h"

namespace lextax {

double AssociationRatio(int64_t class_word_count, int64_t class_total,
                        int64_t word_count, int64_t corpus_total) {
  if (class_total <= 0) throw InvariantError("class total must be positive");
  if (corpus_total <= 0) throw InvariantError("corpus total must be positive");
  if (class_word_count < 0 || class_word_count > class_total ||
      class_word_count > word_count || word_count > corpus_total ||
      class_total > corpus_total) {
    throw InvariantError("inconsistent association ratio counts");
  }
  if (class_word_count == 0) return 0.0;

  // Pr(w|c) / Pr(w) = (count(w,c) * N) / (tokens(c) * count(w)), compared as
  // exact integers so that equal probabilities give exactly zero.
  using Wide = __int128;
  Wide numerator = static_cast<Wide>(class_word_count) * corpus_total;
  Wide denominator = static_cast<Wide>(class_total) * word_count;
  if (numerator == denominator) return 0.0;
  double conditional = static_cast<double>(class_word_count) /
                       static_cast<double>(class_total);
  double ratio = static_cast<double>(numerator) /
                 static_cast<double>(denominator);
  return conditional * std::log2(ratio);
}

// ---------------------------------------------------------------------------
// Table

SalienceTable SalienceTable::FromCounts(CorpusCounts counts) {
  SalienceTable table;
  for (const auto &[cls, total] : counts.class_totals) {
    table.classes_.push_back(cls);
  }
  for (const auto &[cell, count] : counts.class_word_counts) {
    const auto &[word, cls] = cell;
    double score = AssociationRatio(count, counts.class_totals.at(cls),
                                    counts.word_counts.at(word),
                                    counts.corpus_total);
    if (!(score > 0.0)) continue;
    uint32_t index = *table.ClassIndex(cls);
    table.words_[word].push_back({index, score, count});
    ++table.size_;
  }
  for (auto &[word, entries] : table.words_) {
    std::sort(entries.begin(), entries.end(),
              [](const SalientEntry &a, const SalientEntry &b) {
                return a.class_index < b.class_index;
              });
  }
  table.counts_ = std::move(counts);
  return table;
}

SalienceTable SalienceTable::FromScores(
    const std::vector<std::tuple<std::string, std::string, double, int64_t>>
        &rows) {
  SalienceTable table;
  for (const auto &row : rows) table.classes_.push_back(std::get<1>(row));
  std::sort(table.classes_.begin(), table.classes_.end());
  table.classes_.erase(std::unique(table.classes_.begin(), table.classes_.end()),
                       table.classes_.end());
  for (const auto &[word, cls, score, local_count] : rows) {
    if (!(score > 0.0) || !std::isfinite(score)) {
      throw DataError("non-positive salience for (" + word + ", " + cls + ")");
    }
    if (local_count < 1) {
      throw DataError("local count below 1 for (" + word + ", " + cls + ")");
    }
    uint32_t index = *table.ClassIndex(cls);
    auto &entries = table.words_[word];
    for (const SalientEntry &e : entries) {
      if (e.class_index == index) {
        throw DataError("duplicate salience row (" + word + ", " + cls + ")");
      }
    }
    entries.push_back({index, score, local_count});
    ++table.size_;
  }
  for (auto &[word, entries] : table.words_) {
    std::sort(entries.begin(), entries.end(),
              [](const SalientEntry &a, const SalientEntry &b) {
                return a.class_index < b.class_index;
              });
  }
  return table;
}

std::optional<uint32_t> SalienceTable::ClassIndex(std::string_view cls) const {
  auto it = std::lower_bound(classes_.begin(), classes_.end(), cls);
  if (it == classes_.end() || *it != cls) return std::nullopt;
  return static_cast<uint32_t>(it - classes_.begin());
}

std::span<const SalientEntry> SalienceTable::Lookup(
    std::string_view word) const {
  auto it = words_.find(word);
  if (it == words_.end()) return {};
  return it->second;
}

double SalienceTable::Score(std::string_view word, std::string_view cls) const {
  std::optional<uint32_t> index = ClassIndex(cls);
  if (!index) return 0.0;
  for (const SalientEntry &e : Lookup(word)) {
    if (e.class_index == *index) return e.score;
  }
  return 0.0;
}

int64_t SalienceTable::LocalCount(std::string_view word,
                                  std::string_view cls) const {
  std::optional<uint32_t> index = ClassIndex(cls);
  if (!index) return 0;
  for (const SalientEntry &e : Lookup(word)) {
    if (e.class_index == *index) return e.local_count;
  }
  return 0;
}

int64_t SalienceTable::SalientWords(std::string_view cls) const {
  std::optional<uint32_t> index = ClassIndex(cls);
  if (!index) return 0;
  int64_t n = 0;
  for (const auto &[word, entries] : words_) {
    for (const SalientEntry &e : entries) {
      if (e.class_index == *index) ++n;
    }
  }
  return n;
}

SalienceTable SalienceTable::Scaled(double factor) const {
  if (!(factor > 0.0)) throw InvariantError("scale factor must be positive");
  SalienceTable scaled = *this;
  for (auto &[word, entries] : scaled.words_) {
    for (SalientEntry &e : entries) e.score *= factor;
  }
  return scaled;
}

// ---------------------------------------------------------------------------
// Training

namespace {

// Per-class occurrence counts of one word form.
using CountFold = std::unordered_map<std::string_view, std::vector<int64_t>>;

void FoldSense(const Sense &sense, uint32_t cls, size_t num_classes,
               const StopwordList &stopwords, CountFold &fold) {
  for (const std::string &token : sense.definition_tokens) {
    if (stopwords.Contains(token)) continue;
    auto &counts = fold[token];
    if (counts.empty()) counts.assign(num_classes, 0);
    ++counts[cls];
  }
}

void MergeFold(const CountFold &from, CountFold &into) {
  for (const auto &[word, counts] : from) {
    auto &target = into[word];
    if (target.empty()) {
      target = counts;
    } else {
      for (size_t i = 0; i < counts.size(); ++i) target[i] += counts[i];
    }
  }
}

}  // namespace

CorpusCounts CountCorpus(const LabelledCorpus &labels, const Dictionary &dict,
                         const StopwordList &stopwords, Execution execution) {
  if (labels.empty()) throw DataError("empty labelled corpus");

  std::vector<std::string> classes;
  for (const LabelledSense &label : labels) classes.push_back(label.tag);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  std::vector<const Sense *> senses(labels.size());
  std::vector<uint32_t> tags(labels.size());
  CorpusCounts counts;
  for (size_t i = 0; i < labels.size(); ++i) {
    senses[i] = dict.Find(labels[i].sense_id);
    if (senses[i] == nullptr) {
      throw DataError("labelled sense " + labels[i].sense_id +
                      " is not in the dictionary");
    }
    tags[i] = static_cast<uint32_t>(
        std::lower_bound(classes.begin(), classes.end(), labels[i].tag) -
        classes.begin());
    ++counts.class_senses[labels[i].tag];
  }

  CountFold total;
  if (execution == Execution::kSerial) {
    for (size_t i = 0; i < senses.size(); ++i) {
      FoldSense(*senses[i], tags[i], classes.size(), stopwords, total);
    }
  } else {
#pragma omp parallel
    {
      CountFold local;
#pragma omp for schedule(static)
      for (size_t i = 0; i < senses.size(); ++i) {
        FoldSense(*senses[i], tags[i], classes.size(), stopwords, local);
      }
#pragma omp critical(lextax_count_merge)
      MergeFold(local, total);
    }
  }

  for (const auto &[word, per_class] : total) {
    int64_t word_total = 0;
    for (size_t c = 0; c < per_class.size(); ++c) {
      if (per_class[c] == 0) continue;
      word_total += per_class[c];
      counts.class_totals[classes[c]] += per_class[c];
      counts.class_word_counts[{std::string(word), classes[c]}] = per_class[c];
    }
    counts.word_counts[std::string(word)] = word_total;
    counts.corpus_total += word_total;
  }
  return counts;
}

SalienceTable TrainSalience(const LabelledCorpus &labels,
                            const Dictionary &dict,
                            const StopwordList &stopwords,
                            Execution execution) {
  return SalienceTable::FromCounts(
      CountCorpus(labels, dict, stopwords, execution));
}

double Relevance(const SalienceTable &table, std::string_view word,
                 std::string_view cls) {
  return table.Score(word, cls) *
         static_cast<double>(table.LocalCount(word, cls));
}

std::vector<RankedWord> TopSalientWords(const SalienceTable &table,
                                        std::string_view cls, size_t k) {
  std::vector<RankedWord> ranked;
  auto index = std::lower_bound(table.classes().begin(), table.classes().end(),
                                cls);
  if (index == table.classes().end() || *index != cls) return ranked;
  uint32_t ci = static_cast<uint32_t>(index - table.classes().begin());
  for (const auto &[word, entries] : table.words()) {
    for (const SalientEntry &e : entries) {
      if (e.class_index != ci) continue;
      ranked.push_back({word, e.score, e.local_count,
                        e.score * static_cast<double>(e.local_count)});
    }
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const RankedWord &a, const RankedWord &b) {
              if (a.relevance != b.relevance) return a.relevance > b.relevance;
              return a.word < b.word;
            });
  if (k > 0 && ranked.size() > k) ranked.resize(k);
  return ranked;
}

std::vector<ClassTrainingRow> TrainingSummary(const SalienceTable &table) {
  std::set<std::string> classes(table.classes().begin(), table.classes().end());
  for (const auto &[cls, n] : table.counts().class_senses) classes.insert(cls);
  std::vector<ClassTrainingRow> rows;
  for (const std::string &cls : classes) {
    ClassTrainingRow row;
    row.cls = cls;
    auto senses = table.counts().class_senses.find(cls);
    if (senses != table.counts().class_senses.end()) row.senses = senses->second;
    auto tokens = table.counts().class_totals.find(cls);
    if (tokens != table.counts().class_totals.end()) {
      row.content_words = tokens->second;
    }
    row.salient_words = table.SalientWords(cls);
    rows.push_back(row);
  }
  return rows;
}

void WriteSalienceTable(const SalienceTable &table, std::ostream &out) {
  out << "# word\tclass\tar\tlocal_count\n";
  for (const std::string &cls : table.classes()) {
    for (const RankedWord &w : TopSalientWords(table, cls, 0)) {
      out << w.word << '\t' << cls << '\t' << FormatDouble(w.score) << '\t'
          << w.local_count << '\n';
    }
  }
}

SalienceTable ParseSalienceTable(std::istream &in) {
  std::vector<std::tuple<std::string, std::string, double, int64_t>> rows;
  ForEachTsvLine(in, [&](int line, const std::vector<std::string> &fields) {
    if (fields.size() != 4) {
      throw DataError(line, "expected 4 tab-separated fields, got " +
                                std::to_string(fields.size()));
    }
    errno = 0;
    char *end = nullptr;
    double score = std::strtod(fields[2].c_str(), &end);
    if (errno != 0 || end == fields[2].c_str() || *end != '\0') {
      throw DataError(line, "bad score \"" + fields[2] + "\"");
    }
    long long count = std::strtoll(fields[3].c_str(), &end, 10);
    if (end == fields[3].c_str() || *end != '\0') {
      throw DataError(line, "bad local count \"" + fields[3] + "\"");
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw DataError(line, "empty word or class");
    }
    rows.emplace_back(fields[0], fields[1], score, count);
  });
  return SalienceTable::FromScores(rows);
}

}  // namespace lextax
