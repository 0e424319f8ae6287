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

#include "rydsim/gate/gate_params.h"

#include <cmath>
#include <stdexcept>

namespace rydsim {

void GateParams::validate() const {
    bool finite = std::isfinite(detuning) && std::isfinite(duration) && std::isfinite(phase_mod_rate) &&
                  std::isfinite(phase_mod_depth) && std::isfinite(phase_mod_delay) && std::isfinite(virtual_rz[0]) &&
                  std::isfinite(virtual_rz[1]);
    if (!finite) {
        throw std::invalid_argument("GateParams: non-finite field");
    }
    if (duration <= 0.0) {
        throw std::invalid_argument("GateParams: duration must be > 0");
    }
    if (phase_mod_depth < 0.0) {
        throw std::invalid_argument("GateParams: phase_mod_depth must be >= 0");
    }
}

double waveform_phase(const GateParams &gate, double t) {
    return gate.phase_mod_depth * std::sin(gate.phase_mod_rate * (t - gate.phase_mod_delay));
}

AtomDriveSpec drive_with_gate(const AtomDriveSpec &base, const GateParams &gate) {
    AtomDriveSpec out = base;
    out.two_photon_detuning += gate.detuning;
    out.phase = [depth = gate.phase_mod_depth, rate = gate.phase_mod_rate, delay = gate.phase_mod_delay](double t) {
        return depth * std::sin(rate * (t - delay));
    };
    return out;
}

}  // namespace rydsim
