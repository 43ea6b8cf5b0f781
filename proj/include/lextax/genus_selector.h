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

// Selection of the genus terms that head the taxonomy of one class.
//
// Genus terms of the senses labelled with a class are counted and then
// filtered:
//   F1  some concept the genus translates to belongs to the class;
//   F2  the class is the genus's strictly most frequent class;
//   F3  the genus occurs more than t times in the class ("F3>t").
// A rejected genus records the first filter it fails, in F1, F2, F3 order.

#ifndef LEXTAX_GENUS_SELECTOR_H_
#define LEXTAX_GENUS_SELECTOR_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lextax/labels.h"
#include "lextax/lexicon.h"

namespace lextax {

class GenusFrequencyTable {
 public:
  // Counts the genus of every labelled sense that has one. `classes` adds
  // (possibly empty) rows for classes without labels. Throws DataError for
  // sense ids missing from `dict`.
  static GenusFrequencyTable Build(const LabelledCorpus &labels,
                                   const Dictionary &dict,
                                   const std::vector<std::string> &classes = {});

  bool HasClass(std::string_view cls) const;
  std::vector<std::string> Classes() const;

  // genus -> sense ids (corpus order) for one class; null for unknown classes.
  const std::map<std::string, std::vector<std::string>, std::less<>> *Row(
      std::string_view cls) const;

  int64_t Count(std::string_view genus, std::string_view cls) const;

  // Class with the highest count for `genus`, ties by class name; nothing for
  // unseen genus terms.
  std::optional<std::string> MaxClass(std::string_view genus) const;

  // Like MaxClass() but nothing when the maximum is shared.
  std::optional<std::string> StrictMaxClass(std::string_view genus) const;

  // Senses of the class that have a genus.
  int64_t ClassTotal(std::string_view cls) const;

 private:
  std::map<std::string,
           std::map<std::string, std::vector<std::string>, std::less<>>,
           std::less<>>
      rows_;
  // genus -> class -> count
  std::map<std::string, std::map<std::string, int64_t>, std::less<>> by_genus_;
};

struct GenusRowSummary {
  int64_t distinct_genus = 0;
  int64_t repeated_genus = 0;  // occurring more than once
  int64_t senses = 0;
};

GenusRowSummary SummarizeRow(const GenusFrequencyTable &table,
                             std::string_view cls);

struct GenusCount {
  std::string genus;
  int64_t count = 0;
};

// Genus terms of a class by count descending, ties by genus; k == 0 for all.
std::vector<GenusCount> TopGenus(const GenusFrequencyTable &table,
                                 std::string_view cls, size_t k);

struct FilterConfig {
  bool f1 = false;
  bool f2 = false;
  int f3_threshold = 0;  // keep count > threshold

  bool operator==(const FilterConfig &other) const = default;
};

enum class FilterReason { kF1, kF2, kF3 };

std::string FilterReasonName(FilterReason reason);

struct GenusSelection {
  std::string cls;
  FilterConfig config;
  std::set<std::string> selected;
  std::map<std::string, FilterReason> rejected;

  bool operator==(const GenusSelection &other) const = default;
};

// Filters the genus terms of `cls`. Throws UsageError for classes missing
// from the table.
GenusSelection ApplyFilters(const GenusFrequencyTable &table,
                            std::string_view cls,
                            const BilingualMap &bilingual,
                            const SemanticNet &net, const FilterConfig &config);

// JSON {"class","config":{"f1","f2","f3_threshold"},"selected":[...],
// "rejected":{genus: "F1"|"F2"|"F3"}}.
void WriteSelection(const GenusSelection &selection, std::ostream &out);
GenusSelection ParseSelection(std::istream &in);

// Manual judgements used for the accuracy columns of the sweep report. TSV
// rows "sense <sense_id> correct|incorrect" and
// "genus <word> correct|incorrect".
struct SelectionGold {
  std::map<std::string, bool> senses;
  std::map<std::string, bool> genus;
};

SelectionGold ParseSelectionGold(std::istream &in);

// One line of a threshold sweep: "F3>9", "F1+F3>9" or "F2+F3>9".
struct SweepRow {
  std::string label;
  int threshold = 0;
  int64_t genus_terms = 0;  // #GT
  int64_t definitions = 0;  // #D
  std::optional<double> genus_accuracy;
  std::optional<double> definition_accuracy;

  bool operator==(const SweepRow &other) const = default;
};

// Share of the correct genus terms kept by F3 alone that F1 (resp. F2) also
// keeps, at one threshold.
struct CoverageRow {
  int threshold = 0;
  std::optional<double> vs_f1;
  std::optional<double> vs_f2;
};

struct SelectionReport {
  std::string cls;
  std::vector<SweepRow> f3;
  std::vector<SweepRow> f1_f3;
  std::vector<SweepRow> f2_f3;
  std::vector<CoverageRow> coverage;  // empty without genus judgements
};

// Sweeps thresholds in the given order. Accuracy columns are filled only from
// the judgements in `gold`, over judged items.
SelectionReport BuildSelectionReport(const GenusFrequencyTable &table,
                                     std::string_view cls,
                                     const BilingualMap &bilingual,
                                     const SemanticNet &net,
                                     const std::vector<int> &thresholds,
                                     const SelectionGold *gold);

// TSV: filter, threshold, genus_terms, genus_accuracy, definitions,
// definition_accuracy (accuracies empty when unknown).
void WriteSelectionReportTsv(const SelectionReport &report, std::ostream &out);

}  // namespace lextax

#endif  // LEXTAX_GENUS_SELECTOR_H_
