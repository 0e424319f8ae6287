// Copyright 2026 The RydSim Authors
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

#ifndef RYDSIM_UTIL_PARALLEL_H
#define RYDSIM_UTIL_PARALLEL_H

#include <cstddef>
#include <functional>

namespace rydsim {

/// Worker count: hardware concurrency, capped by the RYDSIM_THREADS
/// environment variable when it holds a positive integer.
int worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Work items
/// are claimed dynamically; callers write results into per-index slots so the
/// outcome does not depend on scheduling. The first exception thrown by any
/// item is rethrown after all workers stop. `workers` > 0 overrides
/// worker_count().
void parallel_for(size_t n, const std::function<void(size_t)> &body, int workers = 0);

}  // namespace rydsim

#endif
