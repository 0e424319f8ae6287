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

#ifndef RYDSIM_QND_SIMULATOR_H
#define RYDSIM_QND_SIMULATOR_H

#include <cstdint>
#include <string>
#include <vector>

#include "rydsim/qnd/circuit.h"

namespace rydsim {

enum class DepolarizingMode {
    // rho -> (1 - sigma) rho + sigma (I/4 x Tr_pair rho) after each CZ.
    kTwoQubit,
    // Independent single-qubit depolarizing with probability sigma on each
    // CZ qubit.
    kOneQubitEach,
};

/// Error channels attached to the circuit. After each CZ whose qubits are
/// both present: with probability `loss` one of the pair (chosen uniformly)
/// is lost, with probability `leak` one is leaked, otherwise depolarizing
/// noise acts. Lost qubits read dark (1) and leaked qubits bright (0); a CZ
/// with a lost or leaked partner does nothing. Readout bits are then flipped
/// with probability `spam` (per qubit; a single value is broadcast).
struct NoiseChannelParams {
    double depolarizing = 0.0;
    double leak = 0.0;
    double loss = 0.0;
    std::vector<double> spam{0.0};
    DepolarizingMode mode = DepolarizingMode::kTwoQubit;

    void validate() const;
    double spam_for(int qubit) const;
};

/// Computational-basis input over all qubits, qubit 0 first (e.g. "010").
using BasisInput = std::string;

/// Exact outcome distribution over measured bitstrings (index = bitstring
/// value with the first measured qubit most significant).
struct OutcomeDistribution {
    std::vector<double> probabilities;
    // Probability that at least one qubit was lost or leaked.
    double loss_or_leak = 0.0;
};

OutcomeDistribution exact_distribution(
    const PlaquetteCircuit &circuit, const NoiseChannelParams &noise, const BasisInput &input);

/// Counts per measured bitstring from `shots` sampled trajectories. Shot i
/// draws from its own stream derived from (seed, i).
std::vector<long> sample_histogram(
    const PlaquetteCircuit &circuit, const NoiseChannelParams &noise, const BasisInput &input, long shots,
    uint64_t seed);

/// Noiseless outcome for a basis input (the circuits are deterministic on
/// basis states). Throws CircuitError if the ideal output is not a single
/// bitstring.
int ideal_outcome(const PlaquetteCircuit &circuit, const BasisInput &input);

/// Every data-qubit basis assignment with ancillas in |0>.
std::vector<BasisInput> default_inputs(const PlaquetteCircuit &circuit);

/// Mean probability of the ideal outcome over the inputs, from the exact path.
double predicted_fqnd(
    const PlaquetteCircuit &circuit, const NoiseChannelParams &noise, const std::vector<BasisInput> &inputs);

std::string outcome_label(const PlaquetteCircuit &circuit, int outcome);

}  // namespace rydsim

#endif
