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

#include "rydsim/noise/system_params.h"

#include <cmath>
#include <string>
#include <vector>

#include "rydsim/util/units.h"

namespace rydsim {

namespace {

struct SharedField {
    const char *key;
    double SystemParams::*member;
};

struct SpeciesField {
    const char *key;
    double SpeciesParams::*member;
};

const std::vector<SharedField> &shared_fields() {
    static const std::vector<SharedField> fields{
        {"trap_waist_um", &SystemParams::trap_waist_um},
        {"atom_temperature_uk", &SystemParams::atom_temperature_uk},
        {"trap_power_per_site_mw", &SystemParams::trap_power_mw},
        {"atom_separation_um", &SystemParams::atom_separation_um},
        {"blockade_strength_mhz", &SystemParams::blockade_mhz},
        {"two_photon_rydberg_rabi_mhz", &SystemParams::two_photon_rabi_mhz},
        {"red_pulse_energy_fluctuation_std", &SystemParams::red_energy_std},
        {"blue_pulse_energy_fluctuation_std", &SystemParams::blue_energy_std},
        {"magnetic_detuning_std_khz", &SystemParams::magnetic_detuning_std_khz},
        {"electric_detuning_std_khz", &SystemParams::electric_detuning_std_khz},
        {"laser_frequency_detuning_std_khz", &SystemParams::laser_detuning_std_khz},
        {"radial_dynamic_pointing_std_nm", &SystemParams::dynamic_pointing_std_nm},
        {"radial_static_pointing_error_nm", &SystemParams::static_pointing_error_nm},
        {"rabi_mismatch_half_width", &SystemParams::rabi_mismatch_half_width},
        {"trap_wavelength_nm", &SystemParams::trap_wavelength_nm},
    };
    return fields;
}

const std::vector<SpeciesField> &species_fields() {
    static const std::vector<SpeciesField> fields{
        {"mass_amu", &SpeciesParams::mass_amu},
        {"trap_polarizability_au", &SpeciesParams::trap_polarizability_au},
        {"rydberg_lifetime_us", &SpeciesParams::rydberg_lifetime_us},
        {"intermediate_detuning_ghz", &SpeciesParams::intermediate_detuning_ghz},
        {"intermediate_lifetime_ns", &SpeciesParams::intermediate_lifetime_ns},
        {"blue_dls_mhz", &SpeciesParams::blue_dls_mhz},
        {"blue_single_photon_rabi_mhz", &SpeciesParams::blue_rabi_mhz},
        {"red_single_photon_rabi_mhz", &SpeciesParams::red_rabi_mhz},
        {"red_blue_rabi_ratio", &SpeciesParams::red_blue_rabi_ratio},
        {"blue_waist_um", &SpeciesParams::blue_waist_um},
        {"red_waist_um", &SpeciesParams::red_waist_um},
        {"blue_wavelength_nm", &SpeciesParams::blue_wavelength_nm},
        {"red_wavelength_nm", &SpeciesParams::red_wavelength_nm},
    };
    return fields;
}

constexpr std::array<const char *, 2> kSpeciesSections{"Rb", "Cs"};

const char *axis_name(Axis axis) {
    switch (axis) {
        case Axis::kX:
            return "x";
        case Axis::kY:
            return "y";
        default:
            return "z";
    }
}

// Checks are keyed to file names so errors point at the config line.
void check(bool ok, const std::string &key, const std::string &what) {
    if (!ok) {
        throw ConfigError("key '" + key + "' " + what, 0, key);
    }
}

}  // namespace

double SpeciesParams::red_dls() const {
    if (red_dls_mhz.has_value()) {
        return *red_dls_mhz;
    }
    double ratio = red_rabi_mhz / blue_rabi_mhz;
    return -blue_dls_mhz * ratio * ratio;
}

double SpeciesParams::trap_depth(double power_mw, double waist_um) const {
    if (trap_depth_mk.has_value()) {
        return *trap_depth_mk;
    }
    return rydsim::trap_depth_mk(power_mw, waist_um, trap_polarizability_au);
}

double SpeciesParams::scattering_rate_ground() const {
    double half_rabi = mhz_to_rad_s(blue_rabi_mhz) / 2;
    double delta = ghz_to_rad_s(intermediate_detuning_ghz);
    return half_rabi * half_rabi / (delta * delta) / (intermediate_lifetime_ns * 1e-9);
}

double SpeciesParams::scattering_rate_rydberg() const {
    double half_rabi = mhz_to_rad_s(red_rabi_mhz) / 2;
    double delta = ghz_to_rad_s(intermediate_detuning_ghz);
    return half_rabi * half_rabi / (delta * delta) / (intermediate_lifetime_ns * 1e-9);
}

double SpeciesParams::effective_wavevector() const {
    return std::abs(kTwoPi / (blue_wavelength_nm * 1e-9) - kTwoPi / (red_wavelength_nm * 1e-9));
}

void SystemParams::validate() const {
    auto positive = [](double v) { return std::isfinite(v) && v > 0; };
    auto non_negative = [](double v) { return std::isfinite(v) && v >= 0; };
    auto shared = [](const char *k) { return std::string("shared.") + k; };

    check(positive(trap_waist_um), shared("trap_waist_um"), "must be positive");
    check(non_negative(atom_temperature_uk), shared("atom_temperature_uk"), "must be non-negative");
    check(positive(trap_power_mw), shared("trap_power_per_site_mw"), "must be positive");
    check(positive(atom_separation_um), shared("atom_separation_um"), "must be positive");
    check(non_negative(blockade_mhz), shared("blockade_strength_mhz"), "must be non-negative");
    check(positive(two_photon_rabi_mhz), shared("two_photon_rydberg_rabi_mhz"), "must be positive");
    check(non_negative(red_energy_std), shared("red_pulse_energy_fluctuation_std"), "must be non-negative");
    check(non_negative(blue_energy_std), shared("blue_pulse_energy_fluctuation_std"), "must be non-negative");
    check(non_negative(magnetic_detuning_std_khz), shared("magnetic_detuning_std_khz"), "must be non-negative");
    check(non_negative(electric_detuning_std_khz), shared("electric_detuning_std_khz"), "must be non-negative");
    check(non_negative(laser_detuning_std_khz), shared("laser_frequency_detuning_std_khz"), "must be non-negative");
    check(non_negative(dynamic_pointing_std_nm), shared("radial_dynamic_pointing_std_nm"), "must be non-negative");
    check(non_negative(static_pointing_error_nm), shared("radial_static_pointing_error_nm"), "must be non-negative");
    check(
        non_negative(rabi_mismatch_half_width) && rabi_mismatch_half_width < 1, shared("rabi_mismatch_half_width"),
        "must be in [0, 1)");
    check(positive(trap_wavelength_nm), shared("trap_wavelength_nm"), "must be positive");
    check(
        positive(separation_floor_um) && separation_floor_um < atom_separation_um, "model.separation_floor_um",
        "must be positive and below the atom separation");

    for (int k = 0; k < 2; k++) {
        const SpeciesParams &s = species[k];
        std::string prefix = std::string(kSpeciesSections[k]) + ".";
        check(positive(s.mass_amu), prefix + "mass_amu", "must be positive");
        check(non_negative(s.trap_polarizability_au), prefix + "trap_polarizability_au", "must be non-negative");
        if (s.trap_depth_mk.has_value()) {
            check(positive(*s.trap_depth_mk), prefix + "trap_depth_mk", "must be positive");
        } else {
            check(positive(s.trap_polarizability_au), prefix + "trap_polarizability_au", "must be positive");
        }
        check(positive(s.rydberg_lifetime_us), prefix + "rydberg_lifetime_us", "must be positive");
        check(
            std::isfinite(s.intermediate_detuning_ghz) && s.intermediate_detuning_ghz != 0,
            prefix + "intermediate_detuning_ghz", "must be finite and nonzero");
        check(positive(s.intermediate_lifetime_ns), prefix + "intermediate_lifetime_ns", "must be positive");
        check(std::isfinite(s.blue_dls_mhz), prefix + "blue_dls_mhz", "must be finite");
        if (s.red_dls_mhz.has_value()) {
            check(std::isfinite(*s.red_dls_mhz), prefix + "red_dls_mhz", "must be finite");
        }
        check(positive(s.blue_rabi_mhz), prefix + "blue_single_photon_rabi_mhz", "must be positive");
        check(positive(s.red_rabi_mhz), prefix + "red_single_photon_rabi_mhz", "must be positive");
        check(
            positive(s.red_blue_rabi_ratio) && std::abs(s.red_blue_rabi_ratio - s.red_rabi_mhz / s.blue_rabi_mhz) <= 0.01,
            prefix + "red_blue_rabi_ratio", "must match red/blue single-photon Rabi frequencies within 0.01");
        check(positive(s.blue_waist_um), prefix + "blue_waist_um", "must be positive");
        check(positive(s.red_waist_um), prefix + "red_waist_um", "must be positive");
        check(positive(s.blue_wavelength_nm), prefix + "blue_wavelength_nm", "must be positive");
        check(positive(s.red_wavelength_nm), prefix + "red_wavelength_nm", "must be positive");
    }
}

TrapSpec SystemParams::trap(int atom) const {
    TrapSpec t;
    t.waist_um = trap_waist_um;
    t.wavelength_nm = trap_wavelength_nm;
    t.temperature_uk = atom_temperature_uk;
    t.power_mw = trap_power_mw;
    t.depth_mk = species[atom].trap_depth(trap_power_mw, trap_waist_um);
    return t;
}

SystemParams SystemParams::from_file(const KeyValueFile &file) {
    SystemParams p;
    for (const auto &f : shared_fields()) {
        p.*(f.member) = file.get_double(std::string("shared.") + f.key);
    }
    for (int k = 0; k < 2; k++) {
        std::string prefix = std::string(kSpeciesSections[k]) + ".";
        SpeciesParams &s = p.species[k];
        s.name = kSpeciesSections[k];
        s.rydberg_state = file.contains(prefix + "rydberg_state") ? file.get_string(prefix + "rydberg_state") : "";
        for (const auto &f : species_fields()) {
            s.*(f.member) = file.get_double(prefix + f.key);
        }
        s.trap_depth_mk = file.get_optional_double(prefix + "trap_depth_mk");
        s.red_dls_mhz = file.get_optional_double(prefix + "red_dls_mhz");
    }
    if (auto floor = file.get_optional_double("model.separation_floor_um")) {
        p.separation_floor_um = *floor;
    }
    if (file.contains("model.doppler_axis")) {
        const std::string &axis = file.get_string("model.doppler_axis");
        if (axis == "x") {
            p.doppler_axis = Axis::kX;
        } else if (axis == "y") {
            p.doppler_axis = Axis::kY;
        } else if (axis == "z") {
            p.doppler_axis = Axis::kZ;
        } else {
            throw ConfigError(
                "key 'model.doppler_axis' must be x, y or z", file.line_of("model.doppler_axis"),
                "model.doppler_axis");
        }
    }
    for (const auto &key : file.unused_keys()) {
        throw ConfigError("unknown key '" + key + "'", file.line_of(key), key);
    }
    try {
        p.validate();
    } catch (const ConfigError &e) {
        throw ConfigError(e.what(), file.line_of(e.key()), e.key());
    }
    return p;
}

SystemParams SystemParams::load(const std::string &path) { return from_file(KeyValueFile::load(path)); }

SystemParams SystemParams::parse(const std::string &text) { return from_file(KeyValueFile::parse(text)); }

KeyValueFile SystemParams::to_file() const {
    KeyValueFile file;
    for (const auto &f : shared_fields()) {
        file.set(std::string("shared.") + f.key, format_double(this->*(f.member)));
    }
    for (int k = 0; k < 2; k++) {
        std::string prefix = std::string(kSpeciesSections[k]) + ".";
        const SpeciesParams &s = species[k];
        if (!s.rydberg_state.empty()) {
            file.set(prefix + "rydberg_state", s.rydberg_state);
        }
        for (const auto &f : species_fields()) {
            file.set(prefix + f.key, format_double(s.*(f.member)));
        }
        if (s.trap_depth_mk.has_value()) {
            file.set(prefix + "trap_depth_mk", format_double(*s.trap_depth_mk));
        }
        if (s.red_dls_mhz.has_value()) {
            file.set(prefix + "red_dls_mhz", format_double(*s.red_dls_mhz));
        }
    }
    file.set("model.separation_floor_um", format_double(separation_floor_um));
    file.set("model.doppler_axis", axis_name(doppler_axis));
    return file;
}

std::string SystemParams::to_text() const { return to_file().to_text(); }

}  // namespace rydsim
