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

#ifndef LEXTAX_PARALLEL_H_
#define LEXTAX_PARALLEL_H_

namespace lextax {

// How the per-sense kernels run. kSerial is the plain reference loop;
// kParallel splits the same loop across OpenMP threads. Both produce
// identical results.
enum class Execution { kSerial, kParallel };

// Number of threads kParallel kernels use.
int ThreadCount();

// Sets the thread count for kParallel kernels; values below 1 restore the
// OpenMP default.
void SetThreadCount(int threads);

}  // namespace lextax

#endif  // LEXTAX_PARALLEL_H_
