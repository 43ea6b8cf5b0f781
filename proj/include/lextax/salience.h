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

// Salient words per semantic class.
//
// Every content word form of a labelled definition counts as one occurrence
// in the definition's class. The association ratio of word w with class c is
//
//   AR(w, c) = Pr(w|c) * log2(Pr(w|c) / Pr(w))
//
// with Pr(w|c) = count(w, c) / tokens(c) and Pr(w) = count(w) / tokens. A
// word is salient for c when AR(w, c) > 0; everything else is dropped from the
// table. Relevance, used only for ranking, is AR(w, c) * count(w, c).

#ifndef LEXTAX_SALIENCE_H_
#define LEXTAX_SALIENCE_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "lextax/labels.h"
#include "lextax/lexicon.h"
#include "lextax/parallel.h"

namespace lextax {

// AR for one (word, class) cell. Zero when `class_word_count` is zero.
// Throws InvariantError when `class_total` or `corpus_total` is zero, or when
// the counts are inconsistent.
double AssociationRatio(int64_t class_word_count, int64_t class_total,
                        int64_t word_count, int64_t corpus_total);

// Token counts of a labelled corpus.
struct CorpusCounts {
  int64_t corpus_total = 0;
  std::map<std::string, int64_t> class_totals;
  std::map<std::string, int64_t> word_counts;
  std::map<std::pair<std::string, std::string>, int64_t> class_word_counts;
  // Number of labelled senses per class.
  std::map<std::string, int64_t> class_senses;

  bool operator==(const CorpusCounts &other) const = default;
};

struct SalientEntry {
  uint32_t class_index = 0;
  double score = 0.0;  // AR, always > 0
  int64_t local_count = 0;

  bool operator==(const SalientEntry &other) const = default;
};

class SalienceTable {
 public:
  SalienceTable() = default;

  // Computes AR for every observed (word, class) cell and keeps the positive
  // ones.
  static SalienceTable FromCounts(CorpusCounts counts);

  // Table with given scores and no corpus counts, as read back from TSV.
  // Each row is (word, class, score, local_count).
  static SalienceTable FromScores(
      const std::vector<std::tuple<std::string, std::string, double, int64_t>>
          &rows);

  // Class names, sorted. Entries refer to classes by index into this list.
  const std::vector<std::string> &classes() const { return classes_; }

  // Salient entries of a word sorted by class index; empty for unknown words.
  std::span<const SalientEntry> Lookup(std::string_view word) const;

  // AR of (word, class); 0 when not salient.
  double Score(std::string_view word, std::string_view cls) const;

  // count(word, class) for a salient cell, 0 otherwise.
  int64_t LocalCount(std::string_view word, std::string_view cls) const;

  // Number of salient (word, class) cells.
  size_t size() const { return size_; }

  // Number of salient words of one class.
  int64_t SalientWords(std::string_view cls) const;

  const std::map<std::string, std::vector<SalientEntry>, std::less<>> &words()
      const {
    return words_;
  }

  // Corpus counts the table was trained on; empty for tables read from TSV.
  const CorpusCounts &counts() const { return counts_; }

  // New table with every score multiplied by `factor` (> 0).
  SalienceTable Scaled(double factor) const;

  bool operator==(const SalienceTable &other) const {
    return classes_ == other.classes_ && words_ == other.words_;
  }

 private:
  std::optional<uint32_t> ClassIndex(std::string_view cls) const;

  std::vector<std::string> classes_;
  std::map<std::string, std::vector<SalientEntry>, std::less<>> words_;
  size_t size_ = 0;
  CorpusCounts counts_;
};

// Counts content word forms (tokens minus stopwords) of every labelled
// sense. Throws DataError for an empty corpus or unknown sense ids.
CorpusCounts CountCorpus(const LabelledCorpus &labels, const Dictionary &dict,
                         const StopwordList &stopwords,
                         Execution execution = Execution::kParallel);

SalienceTable TrainSalience(const LabelledCorpus &labels,
                            const Dictionary &dict,
                            const StopwordList &stopwords,
                            Execution execution = Execution::kParallel);

// AR(w, c) * count(w, c); 0 for non-salient cells.
double Relevance(const SalienceTable &table, std::string_view word,
                 std::string_view cls);

struct RankedWord {
  std::string word;
  double score = 0.0;
  int64_t local_count = 0;
  double relevance = 0.0;
};

// Salient words of a class by relevance descending, ties by word ascending.
// k == 0 returns all of them.
std::vector<RankedWord> TopSalientWords(const SalienceTable &table,
                                        std::string_view cls, size_t k);

// Per-class training summary: labelled senses, content tokens, salient words.
struct ClassTrainingRow {
  std::string cls;
  int64_t senses = 0;
  int64_t content_words = 0;
  int64_t salient_words = 0;
};

std::vector<ClassTrainingRow> TrainingSummary(const SalienceTable &table);

// TSV rows "word, class, AR, local_count" sorted by class, then relevance
// descending, then word.
void WriteSalienceTable(const SalienceTable &table, std::ostream &out);
SalienceTable ParseSalienceTable(std::istream &in);

}  // namespace lextax

#endif  // LEXTAX_SALIENCE_H_
