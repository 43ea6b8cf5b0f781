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

#include "lextax/reports.h"

#include <algorithm>
#include <map>
#include <set>

#include "lextax/errors.h"
#include "lextax/text.h"

namespace lextax {

namespace {

// Display width in code points, so accented words align.
size_t Width(std::string_view s) {
  size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::string CountOrDash(int64_t n) { return n == 0 ? "-" : FormatCount(n); }

std::string CountWithShare(int64_t n, int64_t total) {
  if (n == 0) return "-";
  return FormatCount(n) + " (" +
         FormatPercent(static_cast<double>(n), static_cast<double>(total), 1) +
         ")";
}

std::string WholePercent(const std::optional<double> &fraction) {
  if (!fraction) return "-";
  return FormatPercent(*fraction, 1.0, 0);
}

}  // namespace

std::string ReportTable::ToTsv() const {
  std::string out;
  for (const auto &row : rows) {
    out += Join(row, "\t");
    out += '\n';
  }
  return out;
}

std::string ReportTable::ToAligned() const {
  std::vector<size_t> widths;
  for (const auto &row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], Width(row[i]));
    }
  }
  std::string out;
  for (const auto &row : rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += "  ";
      line += row[i];
      line.append(widths[i] - Width(row[i]), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

ReportTable CoverageTable(const CoverageReport &r, const ResourceNames &names) {
  ReportTable t;
  auto add = [&](std::string label, int64_t value) {
    t.rows.push_back({std::move(label), FormatCount(value)});
  };
  add("Noun definitions", r.definitions);
  add("Noun definitions with genus", r.definitions_with_genus);
  add("Genus terms", r.genus_terms);
  add("Genus terms with bilingual translation", r.genus_terms_with_bilingual);
  add("Genus terms with " + names.net + " translation", r.genus_terms_with_net);
  add("Headwords", r.headwords);
  add("Headwords with bilingual translation", r.headwords_with_bilingual);
  add("Headwords with " + names.net + " translation", r.headwords_with_net);
  add("Definitions with bilingual translation", r.definitions_with_bilingual);
  add("Definitions with " + names.net + " translation", r.definitions_with_net);
  return t;
}

void WriteCoverageBlock(const CoverageReport &report, std::ostream &out) {
  for (const auto &[name, value] : report.Counters()) {
    out << name << ": " << value << '\n';
  }
  out << "bilingual_polysemy: " << FormatDouble(report.bilingual_polysemy)
      << '\n';
  out << "net_polysemy: " << FormatDouble(report.net_polysemy) << '\n';
}

std::vector<ComparisonRow> CompareLabellings(const LabelledCorpus &first,
                                             const SalienceTable &table,
                                             const LabelledCorpus &second,
                                             const SemanticNet &net) {
  std::map<std::string, ComparisonRow> rows;
  auto row = [&](const std::string &cls) -> ComparisonRow & {
    ComparisonRow &r = rows[cls];
    r.cls = cls;
    return r;
  };
  for (const LabelledSense &l : first) ++row(l.tag).first_pass;
  for (const ClassTrainingRow &t : TrainingSummary(table)) {
    row(t.cls).content_words = t.content_words;
    row(t.cls).salient_words = t.salient_words;
  }
  for (const LabelledSense &l : second) ++row(l.tag).second_pass;
  for (const Concept &c : net.concepts()) ++row(c.semantic_file).concepts;
  std::vector<ComparisonRow> out;
  for (auto &[cls, r] : rows) out.push_back(std::move(r));
  return out;
}

ReportTable ComparisonTable(const std::vector<ComparisonRow> &rows,
                            const ResourceNames &names) {
  ComparisonRow total;
  for (const ComparisonRow &r : rows) {
    total.first_pass += r.first_pass;
    total.content_words += r.content_words;
    total.salient_words += r.salient_words;
    total.second_pass += r.second_pass;
    total.concepts += r.concepts;
  }
  ReportTable t;
  t.rows.push_back({"Semantic file", "#" + names.dictionary + " senses (a)",
                    "#Content words(b)", "#Salient words(c)",
                    "#" + names.dictionary + " senses (d)",
                    "#" + names.concepts});
  for (const ComparisonRow &r : rows) {
    t.rows.push_back({r.cls, CountWithShare(r.first_pass, total.first_pass),
                      CountOrDash(r.content_words),
                      CountOrDash(r.salient_words),
                      CountWithShare(r.second_pass, total.second_pass),
                      CountWithShare(r.concepts, total.concepts)});
  }
  t.rows.push_back({"Total", FormatCount(total.first_pass),
                    FormatCount(total.content_words),
                    FormatCount(total.salient_words),
                    FormatCount(total.second_pass),
                    FormatCount(total.concepts)});
  return t;
}

ReportTable HistogramTable(const std::vector<HistogramRow> &histogram,
                           std::optional<int64_t> denominator) {
  int64_t sum = 0;
  for (const HistogramRow &r : histogram) sum += r.senses;
  const int64_t whole = denominator.value_or(sum);
  ReportTable t;
  for (const HistogramRow &r : histogram) {
    t.rows.push_back({r.cls, CountWithShare(r.senses, whole)});
  }
  t.rows.push_back({"Total", FormatCount(sum)});
  return t;
}

std::vector<TopGenusEntry> TopGenusEntries(const GenusFrequencyTable &table,
                                           std::string_view cls,
                                           const BilingualMap &bilingual,
                                           size_t k) {
  std::vector<TopGenusEntry> entries;
  for (const GenusCount &g : TopGenus(table, cls, k)) {
    TopGenusEntry e;
    e.genus = g.genus;
    e.count = g.count;
    if (const auto *targets = bilingual.Targets(g.genus)) {
      e.gloss = Join({targets->begin(), targets->end()}, ", ");
    }
    e.removed_by_f2 = table.StrictMaxClass(g.genus) != cls;
    entries.push_back(std::move(e));
  }
  return entries;
}

ReportTable TopGenusTable(const std::vector<TopGenusEntry> &entries,
                          int columns, bool mark_removed) {
  if (columns < 1) throw UsageError("top genus table needs at least 1 column");
  const size_t per_column =
      (entries.size() + static_cast<size_t>(columns) - 1) /
      static_cast<size_t>(columns);
  ReportTable t;
  for (size_t r = 0; r < per_column; ++r) {
    std::vector<std::string> row;
    for (size_t c = 0; c < static_cast<size_t>(columns); ++c) {
      size_t i = c * per_column + r;
      if (i >= entries.size()) break;
      const TopGenusEntry &e = entries[i];
      std::string word = mark_removed && e.removed_by_f2
                             ? "**" + e.genus + "**"
                             : e.genus;
      if (!e.gloss.empty()) word += " (" + e.gloss + ")";
      row.push_back(FormatCount(e.count));
      row.push_back(std::move(word));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

ReportTable SweepTable(std::string_view filter,
                       const std::vector<SweepRow> &rows, bool with_accuracy) {
  ReportTable t;
  std::vector<std::string> header = {"LABEL2 + " + std::string(filter), "#GT"};
  if (with_accuracy) header.push_back("A");
  header.push_back("#D");
  if (with_accuracy) header.push_back("A");
  t.rows.push_back(std::move(header));
  for (const SweepRow &r : rows) {
    std::vector<std::string> row = {r.label, FormatCount(r.genus_terms)};
    if (with_accuracy) row.push_back(WholePercent(r.genus_accuracy));
    row.push_back(FormatCount(r.definitions));
    if (with_accuracy) row.push_back(WholePercent(r.definition_accuracy));
    t.rows.push_back(std::move(row));
  }
  return t;
}

ReportTable SweepCoverageTable(const std::vector<CoverageRow> &rows) {
  ReportTable t;
  t.rows.push_back({"", "Coverage vs F1", "Coverage vs F2"});
  for (const CoverageRow &r : rows) {
    t.rows.push_back({"F3>" + std::to_string(r.threshold),
                      WholePercent(r.vs_f1), WholePercent(r.vs_f2)});
  }
  return t;
}

void WriteSelectionReportText(const SelectionReport &report,
                              std::ostream &out) {
  auto has_accuracy = [](const std::vector<SweepRow> &rows) {
    return std::any_of(rows.begin(), rows.end(), [](const SweepRow &r) {
      return r.genus_accuracy || r.definition_accuracy;
    });
  };
  out << SweepTable("F3", report.f3, has_accuracy(report.f3)).ToAligned()
      << '\n'
      << SweepTable("F1", report.f1_f3, has_accuracy(report.f1_f3)).ToAligned()
      << '\n'
      << SweepTable("F2", report.f2_f3, has_accuracy(report.f2_f3)).ToAligned();
  if (!report.coverage.empty()) {
    out << '\n' << SweepCoverageTable(report.coverage).ToAligned();
  }
}

ReportTable TaxonomyComparisonTable(
    std::string_view cls,
    const std::vector<std::pair<std::string, TaxonomyStats>> &columns) {
  int levels = 0;
  for (const auto &[label, stats] : columns) {
    levels = std::max(levels, stats.levels);
  }
  ReportTable t;
  std::vector<std::string> header = {std::string(cls)};
  for (const auto &[label, stats] : columns) header.push_back(label);
  t.rows.push_back(std::move(header));
  auto add = [&](std::string name, auto value_of) {
    std::vector<std::string> row = {std::move(name)};
    for (const auto &[label, stats] : columns) {
      row.push_back(FormatCount(value_of(stats)));
    }
    t.rows.push_back(std::move(row));
  };
  add("Genus terms", [](const TaxonomyStats &s) { return s.genus_terms; });
  add("Dictionary senses", [](const TaxonomyStats &s) { return s.senses; });
  add("Levels",
      [](const TaxonomyStats &s) { return static_cast<int64_t>(s.levels); });
  for (int level = 1; level <= levels; ++level) {
    add("Senses in level " + std::to_string(level),
        [level](const TaxonomyStats &s) -> int64_t {
          size_t i = static_cast<size_t>(level - 1);
          return i < s.per_level.size() ? s.per_level[i] : 0;
        });
  }
  return t;
}

}  // namespace lextax
