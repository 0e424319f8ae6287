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

#include "rydsim/qnd/circuit.h"

#include <gtest/gtest.h>

#include <cmath>

#include "rydsim/testing/paths.h"

namespace rydsim {

namespace {

std::string error_of(const std::string &text) {
    try {
        parse_circuit(text);
    } catch (const CircuitError &e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(circuit, parse_angles) {
    EXPECT_DOUBLE_EQ(parse_angle("pi/2"), M_PI / 2);
    EXPECT_DOUBLE_EQ(parse_angle("-3*pi/4"), -3 * M_PI / 4);
    EXPECT_DOUBLE_EQ(parse_angle("0.5"), 0.5);
    EXPECT_DOUBLE_EQ(parse_angle("pi"), M_PI);
    EXPECT_DOUBLE_EQ(parse_angle("2*pi"), 2 * M_PI);
    EXPECT_THROW(parse_angle("2pi"), std::invalid_argument);
    EXPECT_THROW(parse_angle("tau"), std::invalid_argument);
}

TEST(circuit, shipped_circuits_load) {
    for (const char *name : {"qnd2_rb_ancilla.circ", "qnd2_cs_ancilla.circ", "zz3.circ"}) {
        PlaquetteCircuit c = load_circuit(source_path(std::string("circuits/") + name));
        c.validate();
        EXPECT_FALSE(c.measured.empty()) << name;
    }
    PlaquetteCircuit zz = load_circuit(source_path("circuits/zz3.circ"));
    ASSERT_EQ(zz.qubits.size(), 3u);
    EXPECT_EQ(zz.qubits[0].role, QubitRole::kAncilla);
    EXPECT_EQ(zz.qubits[1].species, "Cs");
    EXPECT_EQ(zz.index_of("d1"), 2);
    EXPECT_EQ(zz.data_qubits(), (std::vector<int>{1, 2}));
    EXPECT_EQ(zz.gates.size(), 4u);
    EXPECT_EQ(zz.gates[1].kind, GateKind::kCz);
}

TEST(circuit, builder_matches_file) {
    PlaquetteCircuit a = parity_check_circuit("Rb", {"Cs", "Cs"});
    PlaquetteCircuit b = load_circuit(source_path("circuits/zz3.circ"));
    ASSERT_EQ(a.gates.size(), b.gates.size());
    for (size_t i = 0; i < a.gates.size(); i++) {
        EXPECT_EQ(a.gates[i].kind, b.gates[i].kind);
        EXPECT_EQ(a.gates[i].targets, b.gates[i].targets);
        EXPECT_DOUBLE_EQ(a.gates[i].theta, b.gates[i].theta);
        EXPECT_DOUBLE_EQ(a.gates[i].phi, b.gates[i].phi);
    }
    EXPECT_EQ(a.measured, b.measured);
}

TEST(circuit, parse_errors_name_line) {
    EXPECT_NE(error_of("qubit a Rb ancilla\nqubit d Cs\nCZ a x\nmeasure a\n").find("line 3"), std::string::npos);
    EXPECT_NE(error_of("qubit a Rb ancilla\nFOO a\n").find("line 2"), std::string::npos);
    EXPECT_NE(error_of("qubit a Rb ancilla\nqubit a Cs\n").find("line 2"), std::string::npos);
    EXPECT_NE(error_of("qubit a Rb ancilla\nR Rb pi/2\n").find("line 2"), std::string::npos);
    EXPECT_NE(error_of("qubit a Rb ancilla\nqubit b Rb sometimes\n").find("line 2"), std::string::npos);
}

TEST(circuit, structural_errors) {
    // CZ between two data qubits.
    EXPECT_THROW(parse_circuit("qubit a Cs\nqubit b Cs\nCZ a b\nmeasure a\n"), CircuitError);
    // Nothing measured.
    EXPECT_THROW(parse_circuit("qubit a Rb ancilla\nqubit b Cs\nCZ a b\n"), CircuitError);
    // Too many qubits.
    EXPECT_THROW(
        parse_circuit("qubit a Rb ancilla\nqubit b Cs\nqubit c Cs\nqubit d Cs\nqubit e Cs\nmeasure a\n"), CircuitError);
}

}  // namespace rydsim
