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

// Published report tables as literal inputs with their expected renders.

#ifndef LEXTAX_TESTS_PUBLISHED_TABLES_H_
#define LEXTAX_TESTS_PUBLISHED_TABLES_H_

#include <string>
#include <vector>

namespace lextax::testing {

struct GoldenRender {
  std::string name;
  std::string got;   // TSV rendered from the literal inputs
  std::string want;  // published layout
};

// First-attachment coverage, second-labelling histogram, top beginners,
// frequency sweep and taxonomy sizes.
std::vector<GoldenRender> PublishedTableRenders();

}  // namespace lextax::testing

#endif  // LEXTAX_TESTS_PUBLISHED_TABLES_H_
