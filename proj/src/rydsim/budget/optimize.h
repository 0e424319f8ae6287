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

#ifndef RYDSIM_BUDGET_OPTIMIZE_H
#define RYDSIM_BUDGET_OPTIMIZE_H

#include <cstdint>
#include <string>

#include "rydsim/gate/bell_test.h"
#include "rydsim/noise/noise_sample.h"

namespace rydsim {

/// Bell-circuit error for one shot. `sample == nullptr` means the nominal
/// system with decay included and no shot-to-shot noise.
double bell_test_error(
    const GateParams &gate, const SystemParams &params, const NoiseSample *sample, const StepControl &control = {});

struct OptimizeOptions {
    // Nelder-Mead runs after the two canonical starting points; each restarts
    // from a random perturbation of the best point found so far.
    int restarts = 4;
    uint64_t seed = 1;
    RzMode rz_mode = RzMode::kCoOptimized;
    int max_evaluations_per_run = 3000;
    // Stop restarting once error - decay floor is below this.
    double target_excess = 1e-7;
    // Failure when the best error stays above max(failure_factor * floor, failure_floor).
    double failure_factor = 10.0;
    double failure_floor = 1e-5;
    // Mechanisms present while optimizing. Shot-to-shot bits are ignored.
    MechanismMask mask = MechanismMask::noiseless();
    StepControl control;
};

struct OptimizeResult {
    GateParams gate;
    double error = 1.0;
    double decay_floor = 0.0;
    int evaluations = 0;
    int runs = 0;
    bool success = false;
    std::string failure_reason;
};

/// Searches the five pulse parameters (with virtual Rz phases chosen per
/// `rz_mode`) for the minimum noiseless Bell error. Starts from the
/// standard time-optimal gate shape scaled to the nominal Rabi frequency.
OptimizeResult optimize_gate(const SystemParams &params, const OptimizeOptions &options = {});

}  // namespace rydsim

#endif
