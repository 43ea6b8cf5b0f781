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

// Human-readable report tables. Every builder returns a grid of cells that
// renders either tab-separated or with space-aligned columns.

#ifndef LEXTAX_REPORTS_H_
#define LEXTAX_REPORTS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lextax/genus_selector.h"
#include "lextax/primary_labeller.h"
#include "lextax/semantic_labeller.h"
#include "lextax/taxonomy.h"

namespace lextax {

struct ReportTable {
  std::vector<std::vector<std::string>> rows;

  // One line per row, cells joined by tabs.
  std::string ToTsv() const;

  // Cells padded to the widest cell of their column, separated by two
  // spaces. Trailing padding is trimmed.
  std::string ToAligned() const;

  bool operator==(const ReportTable &other) const = default;
};

// Resource names that appear in report headings.
struct ResourceNames {
  std::string dictionary = "dictionary";
  std::string net = "net";
  std::string concepts = "net concepts";
};

// First-pass coverage, one counter per row.
ReportTable CoverageTable(const CoverageReport &report,
                          const ResourceNames &names = {});

// "name: value" lines for every counter plus the polysemy figures.
void WriteCoverageBlock(const CoverageReport &report, std::ostream &out);

// One class of the labelling comparison.
struct ComparisonRow {
  std::string cls;
  int64_t first_pass = 0;     // (a)
  int64_t content_words = 0;  // (b)
  int64_t salient_words = 0;  // (c)
  int64_t second_pass = 0;    // (d)
  int64_t concepts = 0;       // concepts of the class in the net

  bool operator==(const ComparisonRow &other) const = default;
};

// Builds comparison rows for every class seen in either pass or the net.
std::vector<ComparisonRow> CompareLabellings(
    const LabelledCorpus &first, const SalienceTable &table,
    const LabelledCorpus &second, const SemanticNet &net);

// Full comparison table with a closing Total row. Percentages are taken over
// the column totals; zero cells render as "-".
ReportTable ComparisonTable(const std::vector<ComparisonRow> &rows,
                            const ResourceNames &names = {});

// Second-pass histogram: class and "count (share%)" with a Total row.
// `denominator` defaults to the sum of the counts.
ReportTable HistogramTable(const std::vector<HistogramRow> &histogram,
                           std::optional<int64_t> denominator = std::nullopt);

struct TopGenusEntry {
  std::string genus;
  int64_t count = 0;
  std::string gloss;          // rendered in parentheses when non-empty
  bool removed_by_f2 = false;  // rendered in bold when marking is enabled
};

// Most frequent genus terms of a class with their translations and the F2
// verdict.
std::vector<TopGenusEntry> TopGenusEntries(const GenusFrequencyTable &table,
                                           std::string_view cls,
                                           const BilingualMap &bilingual,
                                           size_t k);

// Entries laid out column-major in `columns` (count, genus) column pairs.
ReportTable TopGenusTable(const std::vector<TopGenusEntry> &entries,
                          int columns = 2, bool mark_removed = false);

// Threshold sweep of one filter combination. `filter` names the combination
// in the heading ("F3", "F1" or "F2"). Accuracy columns appear only when
// `with_accuracy` is set.
ReportTable SweepTable(std::string_view filter,
                       const std::vector<SweepRow> &rows, bool with_accuracy);

// Correct genus terms kept by F1 and F2 relative to F3 alone.
ReportTable SweepCoverageTable(const std::vector<CoverageRow> &rows);

// All sweep tables of a selection report, blank-line separated.
void WriteSelectionReportText(const SelectionReport &report,
                              std::ostream &out);

// Side-by-side taxonomy statistics; one column per labelled taxonomy.
ReportTable TaxonomyComparisonTable(
    std::string_view cls,
    const std::vector<std::pair<std::string, TaxonomyStats>> &columns);

}  // namespace lextax

#endif  // LEXTAX_REPORTS_H_
