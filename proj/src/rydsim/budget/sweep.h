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

#ifndef RYDSIM_BUDGET_SWEEP_H
#define RYDSIM_BUDGET_SWEEP_H

#include <string>
#include <vector>

#include "rydsim/budget/monte_carlo.h"

namespace rydsim {

/// Copy of `params` at a different temperature and trap power. Explicit trap
/// depths are rescaled linearly with power.
SystemParams with_trap_conditions(const SystemParams &params, double temperature_uk, double power_mw);

struct SweepPoint {
    double temperature_uk = 0.0;
    double power_mw = 0.0;
    double error = 0.0;
    double standard_error = 0.0;
};

/// Monte Carlo error on every (T, P) pair, temperature-major order.
std::vector<SweepPoint> sweep_temperature_power(
    const SystemParams &params, const GateParams &gate, const std::vector<double> &temperatures_uk,
    const std::vector<double> &powers_mw, long shots, uint64_t seed, const MechanismMask &mask = MechanismMask::all(),
    const MonteCarloOptions &options = {});

struct AdiabaticPoint {
    double power_mw = 0.0;
    double temperature_uk = 0.0;
    MonteCarloReport full;
    MonteCarloReport velocity_frozen;
    MonteCarloReport position_frozen;
};

/// Temperature along the expansion-cooling curve T = T0 sqrt(P / P0), with
/// (T0, P0) the configured operating point.
double adiabatic_trace_temperature(const SystemParams &params, double power_mw);

/// Error along the cooling curve with all mechanisms, with atom velocity
/// zeroed, and with atom positions zeroed.
std::vector<AdiabaticPoint> adiabatic_trace(
    const SystemParams &params, const GateParams &gate, const std::vector<double> &powers_mw, long shots,
    uint64_t seed, const MonteCarloOptions &options = {});

std::string format_sweep_csv(const std::vector<SweepPoint> &points);
std::string format_trace_csv(const std::vector<AdiabaticPoint> &points);

}  // namespace rydsim

#endif
