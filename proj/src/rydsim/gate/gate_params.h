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

#ifndef RYDSIM_GATE_GATE_PARAMS_H
#define RYDSIM_GATE_GATE_PARAMS_H

#include <array>

#include "rydsim/gate/hamiltonian.h"

namespace rydsim {

/// Single-pulse CZ: constant two-photon detuning plus a sinusoidal drive
/// phase phi(t) = depth * sin(rate * (t - delay)), followed by virtual Z
/// rotations (one per atom) that remove the single-qubit phases.
struct GateParams {
    double detuning = 0.0;         // rad/s
    double duration = 0.0;         // s
    double phase_mod_rate = 0.0;   // rad/s
    double phase_mod_depth = 0.0;  // rad
    double phase_mod_delay = 0.0;  // s
    std::array<double, 2> virtual_rz{0.0, 0.0};  // rad, atom A then atom B

    /// Throws std::invalid_argument unless duration > 0, depth >= 0 and all
    /// fields are finite.
    void validate() const;
};

double waveform_phase(const GateParams &gate, double t);

/// Copy of `base` driven by `gate`: the gate detuning is added to the drive's
/// two-photon detuning and the phase becomes the gate waveform.
AtomDriveSpec drive_with_gate(const AtomDriveSpec &base, const GateParams &gate);

}  // namespace rydsim

#endif
