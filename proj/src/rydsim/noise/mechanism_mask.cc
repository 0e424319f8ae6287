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

#include "rydsim/noise/mechanism_mask.h"

#include <stdexcept>

namespace rydsim {

namespace {

struct MechanismInfo {
    std::string_view id;
    std::string_view label;
};

constexpr std::array<MechanismInfo, kNumMechanisms> kInfo{{
    {"intermediate_decay", "intermediate state decay"},
    {"rydberg_decay", "Rydberg state decay"},
    {"doppler", "Doppler (atom velocity)"},
    {"localization", "atom localization"},
    {"blockade_fluctuation", "blockade fluctuation (localization)"},
    {"finite_beam_blue", "finite beam size - blue (localization)"},
    {"finite_beam_red", "finite beam size - red (localization)"},
    {"pulse_energy_blue", "pulse energy fluctuation (blue)"},
    {"pulse_energy_red", "pulse energy fluctuation (red)"},
    {"magnetic_noise", "magnetic field noise"},
    {"electric_noise", "electric field noise"},
    {"laser_frequency_noise", "laser frequency noise"},
    {"pointing_fluctuation", "beam pointing fluctuation"},
    {"static_misalignment", "beam misalignment static"},
    {"rabi_mismatch", "Rydberg Rabi mismatch"},
}};

}  // namespace

std::string_view mechanism_id(Mechanism m) {
    return kInfo[static_cast<int>(m)].id;
}

std::string_view mechanism_label(Mechanism m) {
    return kInfo[static_cast<int>(m)].label;
}

Mechanism parse_mechanism(std::string_view id) {
    for (int k = 0; k < kNumMechanisms; k++) {
        if (kInfo[k].id == id) {
            return static_cast<Mechanism>(k);
        }
    }
    throw std::invalid_argument("unknown mechanism '" + std::string(id) + "'");
}

const std::array<Mechanism, 14> &exclusion_mechanisms() {
    static const std::array<Mechanism, 14> rows{
        Mechanism::kIntermediateDecay,   Mechanism::kPulseEnergyBlue,    Mechanism::kRydbergDecay,
        Mechanism::kDoppler,             Mechanism::kBlockadeFluctuation, Mechanism::kPulseEnergyRed,
        Mechanism::kMagneticNoise,       Mechanism::kElectricNoise,      Mechanism::kFiniteBeamBlue,
        Mechanism::kFiniteBeamRed,       Mechanism::kRabiMismatch,       Mechanism::kLaserFrequencyNoise,
        Mechanism::kStaticMisalignment,  Mechanism::kPointingFluctuation,
    };
    return rows;
}

MechanismMask MechanismMask::noiseless() {
    return none().with(Mechanism::kIntermediateDecay, true).with(Mechanism::kRydbergDecay, true);
}

MechanismMask MechanismMask::with(Mechanism m, bool on) const {
    MechanismMask out = *this;
    uint32_t bit = 1u << static_cast<int>(m);
    out.bits = on ? (bits | bit) : (bits & ~bit);
    return out;
}

std::string MechanismMask::to_string() const {
    if (*this == all()) {
        return "all";
    }
    if (*this == none()) {
        return "none";
    }
    std::string out;
    for (int k = 0; k < kNumMechanisms; k++) {
        if (enabled(static_cast<Mechanism>(k))) {
            if (!out.empty()) {
                out += ',';
            }
            out += kInfo[k].id;
        }
    }
    return out;
}

MechanismMask MechanismMask::parse(std::string_view text) {
    if (text == "all") {
        return all();
    }
    if (text == "none") {
        return none();
    }
    if (text == "noiseless") {
        return noiseless();
    }
    MechanismMask mask = none();
    bool subtract = false;
    if (text.starts_with("all-")) {
        mask = all();
        subtract = true;
        text.remove_prefix(4);
    }
    while (!text.empty()) {
        size_t comma = text.find(',');
        std::string_view id = text.substr(0, comma);
        mask = mask.with(parse_mechanism(id), !subtract);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return mask;
}

}  // namespace rydsim
