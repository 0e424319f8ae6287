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

#ifndef RYDSIM_NOISE_MECHANISM_MASK_H
#define RYDSIM_NOISE_MECHANISM_MASK_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace rydsim {

/// Physical error mechanisms that can be switched off individually.
/// kLocalization is the master switch for sampled atom positions; the
/// blockade-fluctuation and finite-beam bits refine which position effects
/// are kept when it is on.
enum class Mechanism : int {
    kIntermediateDecay,
    kRydbergDecay,
    kDoppler,
    kLocalization,
    kBlockadeFluctuation,
    kFiniteBeamBlue,
    kFiniteBeamRed,
    kPulseEnergyBlue,
    kPulseEnergyRed,
    kMagneticNoise,
    kElectricNoise,
    kLaserFrequencyNoise,
    kPointingFluctuation,
    kStaticMisalignment,
    kRabiMismatch,
};

inline constexpr int kNumMechanisms = 15;

/// Short identifier, e.g. "pulse_energy_blue".
std::string_view mechanism_id(Mechanism m);
/// Human readable table label, e.g. "pulse energy fluctuation (blue)".
std::string_view mechanism_label(Mechanism m);
/// Throws std::invalid_argument for unknown identifiers.
Mechanism parse_mechanism(std::string_view id);

/// The fourteen mechanisms reported as separate rows of an exclusion table.
/// Localization is a grouping switch and has no row of its own.
const std::array<Mechanism, 14> &exclusion_mechanisms();

struct MechanismMask {
    uint32_t bits = (1u << kNumMechanisms) - 1;

    static MechanismMask all() { return MechanismMask{}; }
    static MechanismMask none() { return MechanismMask{0}; }
    /// Decay on, every shot-to-shot fluctuation off. This is the setting used
    /// for gate optimization.
    static MechanismMask noiseless();

    bool enabled(Mechanism m) const { return (bits >> static_cast<int>(m)) & 1u; }
    MechanismMask with(Mechanism m, bool on) const;
    MechanismMask without(Mechanism m) const { return with(m, false); }

    /// Comma separated ids of enabled mechanisms, "all" or "none".
    std::string to_string() const;
    /// Inverse of to_string. Also accepts "noiseless" and "all-<id>,<id>".
    static MechanismMask parse(std::string_view text);

    bool operator==(const MechanismMask &) const = default;
};

}  // namespace rydsim

#endif
