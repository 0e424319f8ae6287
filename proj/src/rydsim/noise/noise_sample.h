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

#ifndef RYDSIM_NOISE_NOISE_SAMPLE_H
#define RYDSIM_NOISE_NOISE_SAMPLE_H

#include <array>
#include <cstdint>

#include "rydsim/gate/gate_params.h"
#include "rydsim/gate/hamiltonian.h"
#include "rydsim/noise/mechanism_mask.h"
#include "rydsim/noise/system_params.h"

namespace rydsim {

enum Beam { kBlue = 0, kRed = 1 };

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

/// Draws for one atom in one shot. Positions are displacements from the trap
/// center; pointing offsets are beam-center displacements in the xy plane.
struct AtomDraw {
    Vec3 position_um{};
    Vec3 velocity_m_s{};
    std::array<double, 2> energy_factor{1.0, 1.0};  // indexed by Beam
    std::array<Vec2, 2> pointing_nm{};              // dynamic, indexed by Beam
    std::array<Vec2, 2> static_offset_nm{};         // per run, indexed by Beam
    double rabi_mismatch = 1.0;
    double laser_detuning_khz = 0.0;

    bool operator==(const AtomDraw &) const = default;
};

struct NoiseSample {
    std::array<AtomDraw, 2> atoms;
    double magnetic_detuning_khz = 0.0;
    double electric_detuning_khz = 0.0;
    // Position redraws triggered by the separation floor.
    int rejected_draws = 0;
    MechanismMask mask = MechanismMask::noiseless();

    /// Every field at its nominal value.
    static NoiseSample nominal(MechanismMask mask = MechanismMask::noiseless());

    bool operator==(const NoiseSample &) const = default;
};

/// Static beam misalignment, drawn once per run from the run seed: each beam
/// on each atom is displaced by the calibration-error radius in a uniformly
/// random direction.
std::array<std::array<Vec2, 2>, 2> draw_static_misalignment(const SystemParams &params, uint64_t seed);

/// Draws every random variable for shot `index` and then zeroes the ones the
/// mask disables. All variables are drawn regardless of the mask so that runs
/// with different masks see the same random numbers.
NoiseSample sample_shot(const SystemParams &params, const MechanismMask &mask, uint64_t seed, uint64_t index);

struct ResolvedDrives {
    std::array<AtomDriveSpec, 2> drives;
    double blockade = 0.0;  // rad/s
};

/// Converts a sample into the per-atom drives (gate detuning and waveform
/// applied) and the blockade shift.
ResolvedDrives resolve_drives(const SystemParams &params, const NoiseSample &sample, const GateParams &gate);

/// Separation of the two atoms in um for the given position draws.
double atom_separation(const SystemParams &params, const NoiseSample &sample);

}  // namespace rydsim

#endif
