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

#include "lextax/genus_selector.h"

#include <algorithm>

#include "json.hpp"
#include "lextax/errors.h"
#include "lextax/primary_labeller.h"
#include "lextax/text.h"

namespace lextax {

using json = nlohmann::ordered_json;

GenusFrequencyTable GenusFrequencyTable::Build(
    const LabelledCorpus &labels, const Dictionary &dict,
    const std::vector<std::string> &classes) {
  GenusFrequencyTable table;
  for (const std::string &cls : classes) table.rows_[cls];
  for (const LabelledSense &label : labels) {
    const Sense *sense = dict.Find(label.sense_id);
    if (sense == nullptr) {
      throw DataError("labelled sense " + label.sense_id +
                      " is not in the dictionary");
    }
    auto &row = table.rows_[label.tag];
    if (!sense->genus) continue;
    row[*sense->genus].push_back(sense->sense_id);
    ++table.by_genus_[*sense->genus][label.tag];
  }
  return table;
}

bool GenusFrequencyTable::HasClass(std::string_view cls) const {
  return rows_.find(cls) != rows_.end();
}

std::vector<std::string> GenusFrequencyTable::Classes() const {
  std::vector<std::string> classes;
  for (const auto &[cls, row] : rows_) classes.push_back(cls);
  return classes;
}

const std::map<std::string, std::vector<std::string>, std::less<>> *
GenusFrequencyTable::Row(std::string_view cls) const {
  auto it = rows_.find(cls);
  return it == rows_.end() ? nullptr : &it->second;
}

int64_t GenusFrequencyTable::Count(std::string_view genus,
                                   std::string_view cls) const {
  auto it = by_genus_.find(genus);
  if (it == by_genus_.end()) return 0;
  auto c = it->second.find(std::string(cls));
  return c == it->second.end() ? 0 : c->second;
}

std::optional<std::string> GenusFrequencyTable::MaxClass(
    std::string_view genus) const {
  auto it = by_genus_.find(genus);
  if (it == by_genus_.end()) return std::nullopt;
  const std::string *best = nullptr;
  int64_t best_count = 0;
  for (const auto &[cls, count] : it->second) {
    if (count > best_count) {
      best = &cls;
      best_count = count;
    }
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

std::optional<std::string> GenusFrequencyTable::StrictMaxClass(
    std::string_view genus) const {
  std::optional<std::string> best = MaxClass(genus);
  if (!best) return std::nullopt;
  int64_t best_count = Count(genus, *best);
  for (const auto &[cls, count] : by_genus_.find(genus)->second) {
    if (cls != *best && count == best_count) return std::nullopt;
  }
  return best;
}

int64_t GenusFrequencyTable::ClassTotal(std::string_view cls) const {
  const auto *row = Row(cls);
  if (row == nullptr) return 0;
  int64_t total = 0;
  for (const auto &[genus, senses] : *row) {
    total += static_cast<int64_t>(senses.size());
  }
  return total;
}

GenusRowSummary SummarizeRow(const GenusFrequencyTable &table,
                             std::string_view cls) {
  GenusRowSummary summary;
  const auto *row = table.Row(cls);
  if (row == nullptr) return summary;
  for (const auto &[genus, senses] : *row) {
    ++summary.distinct_genus;
    if (senses.size() > 1) ++summary.repeated_genus;
    summary.senses += static_cast<int64_t>(senses.size());
  }
  return summary;
}

std::vector<GenusCount> TopGenus(const GenusFrequencyTable &table,
                                 std::string_view cls, size_t k) {
  std::vector<GenusCount> top;
  const auto *row = table.Row(cls);
  if (row == nullptr) return top;
  for (const auto &[genus, senses] : *row) {
    top.push_back({genus, static_cast<int64_t>(senses.size())});
  }
  std::stable_sort(top.begin(), top.end(),
                   [](const GenusCount &a, const GenusCount &b) {
                     return a.count > b.count;
                   });
  if (k > 0 && top.size() > k) top.resize(k);
  return top;
}

std::string FilterReasonName(FilterReason reason) {
  switch (reason) {
    case FilterReason::kF1:
      return "F1";
    case FilterReason::kF2:
      return "F2";
    case FilterReason::kF3:
      return "F3";
  }
  return "?";
}

namespace {

FilterReason ParseReason(const std::string &name) {
  if (name == "F1") return FilterReason::kF1;
  if (name == "F2") return FilterReason::kF2;
  if (name == "F3") return FilterReason::kF3;
  throw DataError("unknown filter \"" + name + "\"");
}

bool PassesF1(std::string_view genus, std::string_view cls,
              const BilingualMap &bilingual, const SemanticNet &net) {
  for (ConceptIndex c : TranslateToConcepts(genus, bilingual, net)) {
    if (net.node(c).semantic_file == cls) return true;
  }
  return false;
}

}  // namespace

GenusSelection ApplyFilters(const GenusFrequencyTable &table,
                            std::string_view cls,
                            const BilingualMap &bilingual,
                            const SemanticNet &net,
                            const FilterConfig &config) {
  const auto *row = table.Row(cls);
  if (row == nullptr) {
    throw UsageError("unknown class \"" + std::string(cls) + "\"");
  }
  if (config.f3_threshold < 0) throw UsageError("F3 threshold must be >= 0");
  GenusSelection selection;
  selection.cls = std::string(cls);
  selection.config = config;
  for (const auto &[genus, senses] : *row) {
    if (config.f1 && !PassesF1(genus, cls, bilingual, net)) {
      selection.rejected[genus] = FilterReason::kF1;
    } else if (config.f2 && table.StrictMaxClass(genus) != cls) {
      selection.rejected[genus] = FilterReason::kF2;
    } else if (static_cast<int64_t>(senses.size()) <= config.f3_threshold) {
      selection.rejected[genus] = FilterReason::kF3;
    } else {
      selection.selected.insert(genus);
    }
  }
  return selection;
}

void WriteSelection(const GenusSelection &selection, std::ostream &out) {
  json obj;
  obj["class"] = selection.cls;
  obj["config"] = {{"f1", selection.config.f1},
                   {"f2", selection.config.f2},
                   {"f3_threshold", selection.config.f3_threshold}};
  obj["selected"] = json::array();
  for (const std::string &g : selection.selected) obj["selected"].push_back(g);
  obj["rejected"] = json::object();
  for (const auto &[g, reason] : selection.rejected) {
    obj["rejected"][g] = FilterReasonName(reason);
  }
  out << obj.dump(2) << '\n';
}

GenusSelection ParseSelection(std::istream &in) {
  GenusSelection selection;
  try {
    json obj = json::parse(in);
    selection.cls = obj.at("class").get<std::string>();
    const json &config = obj.at("config");
    selection.config.f1 = config.at("f1").get<bool>();
    selection.config.f2 = config.at("f2").get<bool>();
    selection.config.f3_threshold = config.at("f3_threshold").get<int>();
    for (const json &g : obj.at("selected")) {
      selection.selected.insert(g.get<std::string>());
    }
    for (const auto &[g, reason] : obj.at("rejected").items()) {
      selection.rejected[g] = ParseReason(reason.get<std::string>());
    }
  } catch (const json::exception &e) {
    throw DataError(std::string("malformed genus selection: ") + e.what());
  }
  for (const std::string &g : selection.selected) {
    if (selection.rejected.count(g)) {
      throw DataError("genus " + g + " both selected and rejected");
    }
  }
  return selection;
}

SelectionGold ParseSelectionGold(std::istream &in) {
  SelectionGold gold;
  ForEachTsvLine(in, [&](int line, const std::vector<std::string> &fields) {
    if (fields.size() != 3) {
      throw DataError(line, "expected 3 tab-separated fields");
    }
    bool correct;
    if (fields[2] == "correct") {
      correct = true;
    } else if (fields[2] == "incorrect") {
      correct = false;
    } else {
      throw DataError(line, "judgement must be correct or incorrect");
    }
    if (fields[0] == "sense") {
      gold.senses[fields[1]] = correct;
    } else if (fields[0] == "genus") {
      gold.genus[fields[1]] = correct;
    } else {
      throw DataError(line, "record kind must be sense or genus");
    }
  });
  return gold;
}

namespace {

SweepRow MakeRow(const std::string &prefix, int threshold,
                 const GenusSelection &selection,
                 const GenusFrequencyTable &table, const SelectionGold *gold) {
  SweepRow row;
  row.label = prefix + "F3>" + std::to_string(threshold);
  row.threshold = threshold;
  row.genus_terms = static_cast<int64_t>(selection.selected.size());
  const auto *senses = table.Row(selection.cls);
  int64_t judged_genus = 0, correct_genus = 0;
  int64_t judged_senses = 0, correct_senses = 0;
  for (const std::string &g : selection.selected) {
    const auto &ids = senses->at(g);
    row.definitions += static_cast<int64_t>(ids.size());
    if (gold == nullptr) continue;
    auto judged = gold->genus.find(g);
    if (judged != gold->genus.end()) {
      ++judged_genus;
      if (judged->second) ++correct_genus;
    }
    for (const std::string &id : ids) {
      auto s = gold->senses.find(id);
      if (s == gold->senses.end()) continue;
      ++judged_senses;
      if (s->second) ++correct_senses;
    }
  }
  if (judged_genus > 0) {
    row.genus_accuracy = static_cast<double>(correct_genus) /
                         static_cast<double>(judged_genus);
  }
  if (judged_senses > 0) {
    row.definition_accuracy = static_cast<double>(correct_senses) /
                              static_cast<double>(judged_senses);
  }
  return row;
}

int64_t CorrectKept(const GenusSelection &selection, const SelectionGold &gold) {
  int64_t n = 0;
  for (const std::string &g : selection.selected) {
    auto it = gold.genus.find(g);
    if (it != gold.genus.end() && it->second) ++n;
  }
  return n;
}

}  // namespace

SelectionReport BuildSelectionReport(const GenusFrequencyTable &table,
                                     std::string_view cls,
                                     const BilingualMap &bilingual,
                                     const SemanticNet &net,
                                     const std::vector<int> &thresholds,
                                     const SelectionGold *gold) {
  SelectionReport report;
  report.cls = std::string(cls);
  const bool genus_judged = gold != nullptr && !gold->genus.empty();
  for (int t : thresholds) {
    GenusSelection f3 = ApplyFilters(table, cls, bilingual, net, {false, false, t});
    GenusSelection f1 = ApplyFilters(table, cls, bilingual, net, {true, false, t});
    GenusSelection f2 = ApplyFilters(table, cls, bilingual, net, {false, true, t});
    report.f3.push_back(MakeRow("", t, f3, table, gold));
    report.f1_f3.push_back(MakeRow("F1+", t, f1, table, gold));
    report.f2_f3.push_back(MakeRow("F2+", t, f2, table, gold));
    if (genus_judged) {
      CoverageRow coverage;
      coverage.threshold = t;
      int64_t base = CorrectKept(f3, *gold);
      if (base > 0) {
        coverage.vs_f1 = static_cast<double>(CorrectKept(f1, *gold)) /
                         static_cast<double>(base);
        coverage.vs_f2 = static_cast<double>(CorrectKept(f2, *gold)) /
                         static_cast<double>(base);
      }
      report.coverage.push_back(coverage);
    }
  }
  return report;
}

void WriteSelectionReportTsv(const SelectionReport &report, std::ostream &out) {
  auto accuracy = [](const std::optional<double> &a) {
    return a ? FormatDouble(*a) : std::string();
  };
  out << "# filter\tthreshold\tgenus_terms\tgenus_accuracy\tdefinitions\t"
         "definition_accuracy\n";
  for (const auto *rows : {&report.f3, &report.f1_f3, &report.f2_f3}) {
    for (const SweepRow &row : *rows) {
      std::string filter = row.label.substr(0, row.label.find('>'));
      out << filter << '\t' << row.threshold << '\t' << row.genus_terms << '\t'
          << accuracy(row.genus_accuracy) << '\t' << row.definitions << '\t'
          << accuracy(row.definition_accuracy) << '\n';
    }
  }
}

}  // namespace lextax
