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

#include "rydsim/budget/optimize.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rydsim/util/hash.h"
#include "rydsim/util/key_value_file.h"
#include "rydsim/util/nelder_mead.h"
#include "rydsim/util/units.h"

namespace rydsim {

namespace {

// Time-optimal CZ in units of the Rabi frequency: duration, modulation rate,
// modulation depth and the phase offset of the sinusoid at t = 0.
constexpr double kDurationTimesRabi = 7.612;
constexpr double kRateOverRabi = 1.0431;
constexpr double kDepth = kTwoPi * 0.1122;
constexpr double kPhaseOffset = -0.7318;

GateParams gate_from_scaled(const std::vector<double> &x, double rabi) {
    GateParams g;
    g.detuning = x[0] * rabi;
    g.duration = x[1] / rabi;
    g.phase_mod_rate = x[2] * rabi;
    g.phase_mod_depth = std::abs(x[3]);
    g.phase_mod_delay = x[4] / rabi;
    return g;
}

}  // namespace

double bell_test_error(
    const GateParams &gate, const SystemParams &params, const NoiseSample *sample, const StepControl &control) {
    NoiseSample nominal = NoiseSample::nominal();
    ResolvedDrives r = resolve_drives(params, sample ? *sample : nominal, gate);
    return bell_test_error(gate, r.drives[0], r.drives[1], r.blockade, control);
}

OptimizeResult optimize_gate(const SystemParams &params, const OptimizeOptions &options) {
    double rabi = mhz_to_rad_s(params.two_photon_rabi_mhz);
    NoiseSample nominal = NoiseSample::nominal(options.mask);
    int evaluations = 0;

    auto evaluate = [&](const std::vector<double> &x, GateParams *out) {
        GateParams g = gate_from_scaled(x, rabi);
        if (!(g.duration > 0) || !std::isfinite(g.duration)) {
            return 1.0;
        }
        ResolvedDrives r = resolve_drives(params, nominal, g);
        BellTestResult res = run_bell_test(g, r.drives[0], r.drives[1], r.blockade, options.control);
        g.virtual_rz = optimal_virtual_rz(res.gate_diagonal, options.rz_mode);
        if (out) {
            *out = g;
        }
        evaluations++;
        return bell_error_from_diagonal(res.gate_diagonal, g.virtual_rz);
    };
    auto objective = [&](const std::vector<double> &x) { return evaluate(x, nullptr); };
    auto floor_of = [&](const GateParams &g) {
        ResolvedDrives r = resolve_drives(params, nominal, g);
        return decay_floor(g, r.drives[0], r.drives[1], r.blockade, options.control);
    };

    NelderMeadOptions nm;
    nm.max_evaluations = options.max_evaluations_per_run;
    nm.f_tolerance = 1e-14;
    nm.x_tolerance = 1e-10;
    nm.initial_step = {0.02, 0.05, 0.02, 0.05, 0.05};

    double base_delay = (kPhaseOffset - kPi / 2) / kRateOverRabi;
    std::vector<std::vector<double>> canonical{
        {0.0, kDurationTimesRabi, kRateOverRabi, kDepth, base_delay + kPi / kRateOverRabi},
        {0.0, kDurationTimesRabi, kRateOverRabi, kDepth, base_delay},
    };

    std::mt19937_64 rng(stream_seed(options.seed, 0x6f7074, 0));
    std::normal_distribution<double> normal(0.0, 1.0);

    OptimizeResult best;
    std::vector<double> best_x;
    int total_runs = static_cast<int>(canonical.size()) + options.restarts;
    for (int run = 0; run < total_runs; run++) {
        std::vector<double> start;
        if (run < static_cast<int>(canonical.size())) {
            start = canonical[run];
        } else {
            start = best_x;
            for (size_t k = 0; k < start.size(); k++) {
                start[k] += nm.initial_step[k] * normal(rng);
            }
        }
        NelderMeadResult r = nelder_mead(objective, start, nm);
        best.runs++;
        if (best_x.empty() || r.value < best.error) {
            best_x = r.x;
            evaluate(best_x, &best.gate);
            best.error = r.value;
            best.decay_floor = floor_of(best.gate);
        }
        if (best.error - best.decay_floor < options.target_excess) {
            break;
        }
    }
    best.evaluations = evaluations;
    double threshold = std::max(options.failure_factor * best.decay_floor, options.failure_floor);
    best.success = best.error < threshold;
    if (!best.success) {
        best.failure_reason = "best error " + format_double(best.error) + " after " + std::to_string(best.runs) +
                              " runs exceeds threshold " + format_double(threshold);
    }
    return best;
}

}  // namespace rydsim
