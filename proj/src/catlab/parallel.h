// Copyright 2026 The catlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef CATLAB_PARALLEL_H
#define CATLAB_PARALLEL_H

#include <cstddef>
#include <functional>

namespace catlab {

/// Worker count: CATLAB_THREADS if set to a positive integer, else the hardware concurrency.
size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index runs exactly once, so
/// results written to slot i are independent of scheduling. The exception thrown by the lowest
/// failing index is rethrown after all workers stop.
void parallel_for(size_t n, const std::function<void(size_t)> &body);

}  // namespace catlab

#endif
