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

#include <gtest/gtest.h>

#include "rydsim/analysis/data_files.h"
#include "rydsim/testing/paths.h"

using namespace rydsim;

namespace {

std::string current_text() { return read_text_file(source_path("configs/current.cfg")); }

std::string replace_line(std::string text, const std::string &key, const std::string &replacement) {
    size_t at = text.find(key + " =");
    size_t end = text.find('\n', at);
    return text.substr(0, at) + replacement + text.substr(end);
}

}  // namespace

TEST(system_params, presets_load_and_validate) {
    auto cur = SystemParams::load(source_path("configs/current.cfg"));
    auto proj = SystemParams::load(source_path("configs/projected.cfg"));
    EXPECT_EQ(cur.species[0].name, "Rb");
    EXPECT_EQ(cur.species[1].name, "Cs");
    EXPECT_EQ(cur.blockade_mhz, 12);
    EXPECT_EQ(cur.two_photon_rabi_mhz, 1.2);
    EXPECT_EQ(cur.atom_separation_um, 5.85);
    EXPECT_EQ(proj.blockade_mhz, 65);
    EXPECT_EQ(proj.two_photon_rabi_mhz, 2.5);
    EXPECT_EQ(proj.atom_separation_um, 4.2);
}

TEST(system_params, text_round_trip) {
    auto cur = SystemParams::load(source_path("configs/current.cfg"));
    auto again = SystemParams::parse(cur.to_text());
    EXPECT_EQ(cur, again);
    EXPECT_EQ(cur.to_text(), again.to_text());
}

TEST(system_params, missing_key_is_named) {
    std::string text = replace_line(current_text(), "blockade_strength_mhz", "");
    try {
        SystemParams::parse(text);
        FAIL();
    } catch (const ConfigError &e) {
        EXPECT_NE(std::string(e.what()).find("blockade_strength_mhz"), std::string::npos);
    }
}

TEST(system_params, unknown_key_reports_line) {
    std::string text = current_text() + "[shared]\n";
    text = replace_line(current_text(), "trap_waist_um", "trap_waist_um = 1.7\ntrap_waste_um = 2");
    try {
        SystemParams::parse(text);
        FAIL();
    } catch (const ConfigError &e) {
        EXPECT_EQ(e.line(), 6);
        EXPECT_NE(std::string(e.what()).find("trap_waste_um"), std::string::npos);
    }
}

TEST(system_params, invalid_values_rejected) {
    EXPECT_THROW(SystemParams::parse(replace_line(current_text(), "trap_waist_um", "trap_waist_um = -1")), ConfigError);
    EXPECT_THROW(
        SystemParams::parse(replace_line(current_text(), "atom_temperature_uk", "atom_temperature_uk = abc")),
        ConfigError);
    EXPECT_THROW(
        SystemParams::parse(replace_line(current_text(), "doppler_axis", "doppler_axis = w")), ConfigError);
    // Ratio must be consistent with the single-photon Rabi frequencies.
    EXPECT_THROW(
        SystemParams::parse(replace_line(current_text(), "red_blue_rabi_ratio", "red_blue_rabi_ratio = 0.9")),
        ConfigError);
}

TEST(system_params, derived_rates) {
    auto p = SystemParams::load(source_path("configs/current.cfg"));
    const auto &rb = p.species[0];
    // (Omega_b / 2)^2 / Delta^2 / tau with Omega_b = 2 pi 90 MHz, Delta = 2 pi 1.4 GHz.
    double expected = std::pow(90.0 / 2, 2) / std::pow(1400.0, 2) / 125e-9;
    EXPECT_NEAR(rb.scattering_rate_ground(), expected, 1e-9 * expected);
    double expected_r = std::pow(38.0 / 2, 2) / std::pow(1400.0, 2) / 125e-9;
    EXPECT_NEAR(rb.scattering_rate_rydberg(), expected_r, 1e-9 * expected_r);
    EXPECT_NEAR(rb.red_dls(), 1.2 * std::pow(38.0 / 90.0, 2), 1e-12);
    double k = 2 * M_PI * (1 / 421e-9 - 1 / 1005e-9);
    EXPECT_NEAR(rb.effective_wavevector(), k, 1e-6 * k);
    EXPECT_NEAR(p.trap(0).depth_mk, rb.trap_depth(2.8, 1.7), 1e-15);
}
