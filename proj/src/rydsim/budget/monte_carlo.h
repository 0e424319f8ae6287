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

#ifndef RYDSIM_BUDGET_MONTE_CARLO_H
#define RYDSIM_BUDGET_MONTE_CARLO_H

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rydsim/budget/optimize.h"

namespace rydsim {

/// Raised when more than the allowed fraction of shots fail to integrate.
class MonteCarloAborted : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct MonteCarloOptions {
    StepControl control;
    double max_failure_fraction = 0.01;
    // Keep per-shot errors in the report (needed for paired differences).
    bool keep_shot_errors = true;
    // Thread count; 0 means worker_count().
    int workers = 0;
};

struct MonteCarloReport {
    double mean_error = 0.0;
    double standard_error = 0.0;
    long shots = 0;
    uint64_t seed = 0;
    MechanismMask mask;
    long rejected_draws = 0;
    long failures = 0;
    // NaN marks a failed shot.
    std::vector<double> shot_errors;
};

/// Mean Bell error over `shots` independent samples. Shot i always uses the
/// random stream (seed, i), and the reduction runs in shot order, so the
/// result does not depend on the number of worker threads.
MonteCarloReport monte_carlo_error(
    const SystemParams &params, const GateParams &gate, const MechanismMask &mask, long shots, uint64_t seed,
    const MonteCarloOptions &options = {});

}  // namespace rydsim

#endif
