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

#include "lextax/labels.h"

#include <set>

#include "json.hpp"
#include "lextax/errors.h"
#include "lextax/text.h"

namespace lextax {

using json = nlohmann::ordered_json;

std::string PassName(int round) {
  if (round == 0) return "first";
  if (round == 1) return "second";
  return "iteration-" + std::to_string(round);
}

int ParsePassName(const std::string &name) {
  if (name == "first") return 0;
  if (name == "second") return 1;
  const std::string prefix = "iteration-";
  if (name.rfind(prefix, 0) == 0) {
    try {
      size_t used = 0;
      int round = std::stoi(name.substr(prefix.size()), &used);
      if (round >= 2 && used == name.size() - prefix.size()) return round;
    } catch (const std::exception &) {
    }
  }
  throw DataError("unknown pass \"" + name + "\"");
}

void WriteLabelledCorpus(const LabelledCorpus &corpus, std::ostream &out) {
  for (const LabelledSense &label : corpus) {
    json obj;
    obj["sense_id"] = label.sense_id;
    obj["tag"] = label.tag;
    obj["pass"] = PassName(label.round);
    json evidence;
    if (const auto *d = std::get_if<DistanceEvidence>(&label.evidence)) {
      evidence["kind"] = "distance";
      evidence["headword_concept"] = d->headword_concept;
      evidence["genus_concept"] = d->genus_concept;
      evidence["distance"] = d->distance;
    } else {
      const auto &s = std::get<SalienceEvidence>(label.evidence);
      evidence["kind"] = "salience";
      json scores = json::object();
      for (const auto &[tag, score] : s.scores) scores[tag] = score;
      evidence["scores"] = std::move(scores);
      evidence["margin"] = s.margin;
      evidence["tie"] = s.tie;
    }
    obj["evidence"] = std::move(evidence);
    out << obj.dump() << '\n';
  }
}

LabelledCorpus ParseLabelledCorpus(std::istream &in) {
  LabelledCorpus corpus;
  std::set<std::string> seen;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty()) continue;
    try {
      json obj = json::parse(line);
      LabelledSense label;
      label.sense_id = obj.at("sense_id").get<std::string>();
      label.tag = obj.at("tag").get<std::string>();
      label.round = ParsePassName(obj.at("pass").get<std::string>());
      const json &evidence = obj.at("evidence");
      const std::string kind = evidence.at("kind").get<std::string>();
      if (kind == "distance") {
        DistanceEvidence d;
        d.headword_concept = evidence.at("headword_concept").get<std::string>();
        d.genus_concept = evidence.at("genus_concept").get<std::string>();
        d.distance = evidence.at("distance").get<double>();
        label.evidence = d;
      } else if (kind == "salience") {
        SalienceEvidence s;
        for (const auto &[tag, score] : evidence.at("scores").items()) {
          s.scores.emplace_back(tag, score.get<double>());
        }
        s.margin = evidence.at("margin").get<double>();
        s.tie = evidence.at("tie").get<bool>();
        label.evidence = s;
      } else {
        throw DataError(line_number, "unknown evidence kind \"" + kind + "\"");
      }
      if (!seen.insert(label.sense_id).second) {
        throw DataError(line_number,
                        "sense " + label.sense_id + " labelled twice");
      }
      corpus.push_back(std::move(label));
    } catch (const json::exception &e) {
      throw DataError(line_number, std::string("malformed label: ") + e.what());
    }
  }
  return corpus;
}

}  // namespace lextax
