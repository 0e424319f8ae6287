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

#include "rydsim/budget/sweep.h"

#include <cmath>
#include <stdexcept>

#include "rydsim/util/key_value_file.h"

namespace rydsim {

SystemParams with_trap_conditions(const SystemParams &params, double temperature_uk, double power_mw) {
    if (!(temperature_uk >= 0) || !(power_mw > 0)) {
        throw std::invalid_argument("sweep needs temperature >= 0 and power > 0.");
    }
    SystemParams out = params;
    for (auto &s : out.species) {
        if (s.trap_depth_mk.has_value()) {
            *s.trap_depth_mk *= power_mw / params.trap_power_mw;
        }
    }
    out.atom_temperature_uk = temperature_uk;
    out.trap_power_mw = power_mw;
    return out;
}

std::vector<SweepPoint> sweep_temperature_power(
    const SystemParams &params, const GateParams &gate, const std::vector<double> &temperatures_uk,
    const std::vector<double> &powers_mw, long shots, uint64_t seed, const MechanismMask &mask,
    const MonteCarloOptions &options) {
    MonteCarloOptions opts = options;
    opts.keep_shot_errors = false;
    std::vector<SweepPoint> out;
    for (double t : temperatures_uk) {
        for (double p : powers_mw) {
            MonteCarloReport r = monte_carlo_error(with_trap_conditions(params, t, p), gate, mask, shots, seed, opts);
            out.push_back({t, p, r.mean_error, r.standard_error});
        }
    }
    return out;
}

double adiabatic_trace_temperature(const SystemParams &params, double power_mw) {
    return params.atom_temperature_uk * std::sqrt(power_mw / params.trap_power_mw);
}

std::vector<AdiabaticPoint> adiabatic_trace(
    const SystemParams &params, const GateParams &gate, const std::vector<double> &powers_mw, long shots,
    uint64_t seed, const MonteCarloOptions &options) {
    MonteCarloOptions opts = options;
    opts.keep_shot_errors = false;
    std::vector<AdiabaticPoint> out;
    for (double p : powers_mw) {
        AdiabaticPoint point;
        point.power_mw = p;
        point.temperature_uk = adiabatic_trace_temperature(params, p);
        SystemParams at = with_trap_conditions(params, point.temperature_uk, p);
        MechanismMask all = MechanismMask::all();
        point.full = monte_carlo_error(at, gate, all, shots, seed, opts);
        point.velocity_frozen = monte_carlo_error(at, gate, all.without(Mechanism::kDoppler), shots, seed, opts);
        point.position_frozen = monte_carlo_error(at, gate, all.without(Mechanism::kLocalization), shots, seed, opts);
        out.push_back(std::move(point));
    }
    return out;
}

std::string format_sweep_csv(const std::vector<SweepPoint> &points) {
    std::string out = "temperature_uk,power_mw,error,standard_error,log10_error\n";
    for (const auto &p : points) {
        out += format_double(p.temperature_uk) + "," + format_double(p.power_mw) + "," + format_double(p.error) + "," +
               format_double(p.standard_error) + "," + format_double(std::log10(p.error)) + "\n";
    }
    return out;
}

std::string format_trace_csv(const std::vector<AdiabaticPoint> &points) {
    std::string out =
        "power_mw,temperature_uk,full_error,full_se,velocity_frozen_error,velocity_frozen_se,"
        "position_frozen_error,position_frozen_se\n";
    for (const auto &p : points) {
        out += format_double(p.power_mw) + "," + format_double(p.temperature_uk) + "," +
               format_double(p.full.mean_error) + "," + format_double(p.full.standard_error) + "," +
               format_double(p.velocity_frozen.mean_error) + "," + format_double(p.velocity_frozen.standard_error) +
               "," + format_double(p.position_frozen.mean_error) + "," +
               format_double(p.position_frozen.standard_error) + "\n";
    }
    return out;
}

}  // namespace rydsim
