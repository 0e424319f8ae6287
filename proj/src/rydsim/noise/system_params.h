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

#ifndef RYDSIM_NOISE_SYSTEM_PARAMS_H
#define RYDSIM_NOISE_SYSTEM_PARAMS_H

#include <array>
#include <optional>
#include <string>

#include "rydsim/trap/trap_physics.h"
#include "rydsim/util/key_value_file.h"

namespace rydsim {

/// Per-species rows of the parameter table plus the atomic constants the
/// model needs to turn them into rates.
struct SpeciesParams {
    std::string name;
    std::string rydberg_state;
    double mass_amu = 0.0;
    double trap_polarizability_au = 0.0;
    // When absent, the depth follows from trap power, waist and polarizability.
    std::optional<double> trap_depth_mk;
    double rydberg_lifetime_us = 0.0;
    double intermediate_detuning_ghz = 0.0;
    double intermediate_lifetime_ns = 0.0;
    double blue_dls_mhz = 0.0;
    // When absent, -blue_dls * (red Rabi / blue Rabi)^2.
    std::optional<double> red_dls_mhz;
    double blue_rabi_mhz = 0.0;
    double red_rabi_mhz = 0.0;
    double red_blue_rabi_ratio = 0.0;
    double blue_waist_um = 0.0;
    double red_waist_um = 0.0;
    double blue_wavelength_nm = 0.0;
    double red_wavelength_nm = 0.0;

    double red_dls() const;
    /// Trap depth in mK at the given power and waist.
    double trap_depth(double power_mw, double waist_um) const;
    /// Scattering rates (1/s) out of |1> and |r> from the intermediate state
    /// at nominal beam intensity: (Omega/2)^2 gamma_e / Delta^2.
    double scattering_rate_ground() const;
    double scattering_rate_rydberg() const;
    /// |k_blue - k_red| for counter-propagating beams, rad/m.
    double effective_wavevector() const;

    bool operator==(const SpeciesParams &) const = default;
};

enum class Axis { kX = 0, kY = 1, kZ = 2 };

/// The full simulation parameter set. Atom 0 sits at the origin and atom 1 at
/// (separation, 0, 0); z is the tweezer axis and the Rydberg beams propagate
/// along z.
struct SystemParams {
    double trap_waist_um = 0.0;
    double atom_temperature_uk = 0.0;
    double trap_power_mw = 0.0;
    double atom_separation_um = 0.0;
    double blockade_mhz = 0.0;
    double two_photon_rabi_mhz = 0.0;
    double red_energy_std = 0.0;
    double blue_energy_std = 0.0;
    double magnetic_detuning_std_khz = 0.0;
    double electric_detuning_std_khz = 0.0;
    double laser_detuning_std_khz = 0.0;
    double dynamic_pointing_std_nm = 0.0;
    double static_pointing_error_nm = 0.0;
    double rabi_mismatch_half_width = 0.0;
    double trap_wavelength_nm = 0.0;

    std::array<SpeciesParams, 2> species;

    double separation_floor_um = 0.5;
    Axis doppler_axis = Axis::kZ;

    /// Throws ConfigError naming the offending key.
    void validate() const;

    TrapSpec trap(int atom) const;

    static SystemParams from_file(const KeyValueFile &file);
    static SystemParams load(const std::string &path);
    static SystemParams parse(const std::string &text);
    KeyValueFile to_file() const;
    std::string to_text() const;

    bool operator==(const SystemParams &) const = default;
};

}  // namespace rydsim

#endif
