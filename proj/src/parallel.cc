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

#include "lextax/parallel.h"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lextax {

namespace {
#ifdef _OPENMP
// Captured before anything calls SetThreadCount().
const int kDefaultThreads = omp_get_max_threads();
#endif
}  // namespace

int ThreadCount() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void SetThreadCount(int threads) {
#ifdef _OPENMP
  omp_set_num_threads(threads < 1 ? kDefaultThreads : threads);
#else
  (void)threads;
#endif
}

}  // namespace lextax
