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

#include "rydsim/budget/monte_carlo.h"

#include <cmath>
#include <limits>
#include <string>

#include "rydsim/util/parallel.h"

namespace rydsim {

MonteCarloReport monte_carlo_error(
    const SystemParams &params, const GateParams &gate, const MechanismMask &mask, long shots, uint64_t seed,
    const MonteCarloOptions &options) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be positive.");
    }
    std::vector<double> errors(shots);
    std::vector<int> rejected(shots);
    parallel_for(static_cast<size_t>(shots), [&](size_t i) {
        NoiseSample sample = sample_shot(params, mask, seed, i);
        rejected[i] = sample.rejected_draws;
        try {
            errors[i] = bell_test_error(gate, params, &sample, options.control);
        } catch (const IntegrationError &) {
            errors[i] = std::numeric_limits<double>::quiet_NaN();
        }
    }, options.workers);

    MonteCarloReport report;
    report.shots = shots;
    report.seed = seed;
    report.mask = mask;
    double sum = 0;
    long good = 0;
    for (long i = 0; i < shots; i++) {
        report.rejected_draws += rejected[i];
        if (std::isnan(errors[i])) {
            report.failures++;
            continue;
        }
        sum += errors[i];
        good++;
    }
    if (report.failures > options.max_failure_fraction * shots) {
        throw MonteCarloAborted(
            std::to_string(report.failures) + " of " + std::to_string(shots) + " shots failed to integrate");
    }
    report.mean_error = good > 0 ? sum / good : std::numeric_limits<double>::quiet_NaN();
    double ss = 0;
    for (long i = 0; i < shots; i++) {
        if (!std::isnan(errors[i])) {
            double d = errors[i] - report.mean_error;
            ss += d * d;
        }
    }
    report.standard_error = good > 1 ? std::sqrt(ss / (good - 1) / good) : 0.0;
    if (options.keep_shot_errors) {
        report.shot_errors = std::move(errors);
    }
    return report;
}

}  // namespace rydsim
