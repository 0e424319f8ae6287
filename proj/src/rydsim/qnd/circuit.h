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

#ifndef RYDSIM_QND_CIRCUIT_H
#define RYDSIM_QND_CIRCUIT_H

#include <stdexcept>
#include <string>
#include <vector>

namespace rydsim {

/// Malformed circuit description; the message names the line.
class CircuitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class QubitRole { kData, kAncilla };

struct Qubit {
    std::string name;
    std::string species;
    QubitRole role = QubitRole::kData;
};

enum class GateKind {
    // Global rotation exp(-i theta/2 (cos phi X + sin phi Y)) on every qubit
    // of one species.
    kGlobalRotation,
    // Local exp(-i theta/2 Z) on one qubit.
    kRz,
    kCz,
};

struct CircuitGate {
    GateKind kind = GateKind::kCz;
    std::string species;  // kGlobalRotation
    std::vector<int> targets;
    double theta = 0.0;
    double phi = 0.0;
};

/// Gate list over at most four named, species-tagged qubits. Qubit 0 is the
/// most significant bit of every bitstring.
struct PlaquetteCircuit {
    std::vector<Qubit> qubits;
    std::vector<CircuitGate> gates;
    std::vector<int> measured;

    int index_of(const std::string &name) const;
    std::vector<int> data_qubits() const;
    /// Throws CircuitError when a CZ does not pair one data qubit with one
    /// ancilla, or no qubit is measured.
    void validate() const;
};

inline constexpr int kMaxCircuitQubits = 4;

/// Line-oriented text:
///
///     qubit <name> <species> [data|ancilla]
///     R <species> <theta> <phi>
///     RZ <qubit> <theta>
///     CZ <qubit> <qubit>
///     measure <qubit>...
///
/// Angles are numbers or simple pi expressions (pi/2, -3*pi/4, 0.5).
/// '#' starts a comment.
PlaquetteCircuit parse_circuit(const std::string &text);
PlaquetteCircuit load_circuit(const std::string &path);

double parse_angle(const std::string &text);

/// Weight-2 parity check: rotate the ancilla to |+>, CZ with each data qubit
/// in order, rotate back, measure all qubits.
PlaquetteCircuit parity_check_circuit(
    const std::string &ancilla_species, const std::vector<std::string> &data_species);

}  // namespace rydsim

#endif
