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

#include <gtest/gtest.h>

using namespace rydsim;

TEST(gate_params, waveform) {
    GateParams g;
    g.duration = 1e-6;
    g.phase_mod_depth = 0.7;
    g.phase_mod_rate = 2e6;
    g.phase_mod_delay = 0.1e-6;
    EXPECT_NEAR(waveform_phase(g, 0.35e-6), 0.7 * std::sin(2e6 * 0.25e-6), 1e-15);
}

TEST(gate_params, validate) {
    GateParams g;
    EXPECT_THROW(g.validate(), std::invalid_argument);
    g.duration = 1e-6;
    g.validate();
    g.phase_mod_depth = -1;
    EXPECT_THROW(g.validate(), std::invalid_argument);
    g.phase_mod_depth = NAN;
    EXPECT_THROW(g.validate(), std::invalid_argument);
}

TEST(gate_params, drive_with_gate_adds_detuning_and_phase) {
    AtomDriveSpec base;
    base.two_photon_detuning = 3.0;
    base.rabi_two_photon = 5.0;
    GateParams g;
    g.duration = 1;
    g.detuning = 2.0;
    g.phase_mod_depth = 0.5;
    g.phase_mod_rate = 1.0;
    auto d = drive_with_gate(base, g);
    EXPECT_EQ(d.two_photon_detuning, 5.0);
    EXPECT_EQ(d.rabi_two_photon, 5.0);
    EXPECT_NEAR(d.phase_at(0.3), 0.5 * std::sin(0.3), 1e-15);
}
