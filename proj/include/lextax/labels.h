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

// Semantically labelled senses and their JSON-lines form:
//
//   {"sense_id":"vino_1_1","tag":"13 food","pass":"first",
//    "evidence":{"kind":"distance","headword_concept":"c7",
//                "genus_concept":"c3","distance":1.5}}
//   {"sense_id":"vino_1_1","tag":"13 food","pass":"second",
//    "evidence":{"kind":"salience","scores":{"13 food":2.1},"margin":2.1,
//                "tie":false}}
//
// "pass" is "first" for the distance labelling, "second" for the first
// salience labelling and "iteration-K" for later rounds.

#ifndef LEXTAX_LABELS_H_
#define LEXTAX_LABELS_H_

#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lextax {

struct DistanceEvidence {
  std::string headword_concept;
  std::string genus_concept;
  double distance = 0.0;

  bool operator==(const DistanceEvidence &other) const = default;
};

struct SalienceEvidence {
  // Non-zero class scores, sorted by class name.
  std::vector<std::pair<std::string, double>> scores;
  double margin = 0.0;
  bool tie = false;  // winner chosen among equal top scores

  bool operator==(const SalienceEvidence &other) const = default;
};

struct LabelledSense {
  std::string sense_id;
  std::string tag;
  int round = 0;  // 0 first pass, 1 second pass, k >= 2 later iterations
  std::variant<DistanceEvidence, SalienceEvidence> evidence;

  bool operator==(const LabelledSense &other) const = default;
};

using LabelledCorpus = std::vector<LabelledSense>;

std::string PassName(int round);

// Inverse of PassName(); throws DataError for unknown names.
int ParsePassName(const std::string &name);

void WriteLabelledCorpus(const LabelledCorpus &corpus, std::ostream &out);
LabelledCorpus ParseLabelledCorpus(std::istream &in);

}  // namespace lextax

#endif  // LEXTAX_LABELS_H_
