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

#ifndef RYDSIM_GATE_HAMILTONIAN_H
#define RYDSIM_GATE_HAMILTONIAN_H

#include <Eigen/Dense>
#include <functional>

#include "rydsim/gate/two_atom_state.h"

namespace rydsim {

/// Drive phase of the |1> <-> |r> coupling as a function of time (s -> rad).
using PhaseFunction = std::function<double(double)>;

/// Everything one atom's Rydberg drive contributes to the Hamiltonian.
/// Frequencies and rates are angular (rad/s) and 1/s respectively.
struct AtomDriveSpec {
    double rabi_two_photon = 0.0;
    double two_photon_detuning = 0.0;
    PhaseFunction phase;
    // Intermediate-state scattering out of |1> and |r>.
    double decay_rate_1 = 0.0;
    double decay_rate_r = 0.0;
    // 1 / Rydberg lifetime.
    double rydberg_decay_rate = 0.0;

    double phase_at(double t) const { return phase ? phase(t) : 0.0; }
    double total_rydberg_loss_rate() const { return decay_rate_r + rydberg_decay_rate; }

    /// Throws std::invalid_argument on negative or non-finite rates.
    void validate() const;
};

using Matrix9cd = Eigen::Matrix<Complex, 9, 9>;

/// Dense non-Hermitian two-atom Hamiltonian at time t (hbar = 1, rad/s):
///
///   sum over atoms of (Omega/2) e^{i phi} |1><r| + h.c. - Delta |r><r|
///                     - (i/2) (G1 |1><1| + (Gr + 1/tau) |r><r|)
///   plus blockade |rr><rr|.
Matrix9cd build_hamiltonian(const AtomDriveSpec &a, const AtomDriveSpec &b, double blockade, double t);

/// Diagonal (time-independent) part of the same Hamiltonian, index by
/// state_index.
std::array<Complex, 9> hamiltonian_diagonal(const AtomDriveSpec &a, const AtomDriveSpec &b, double blockade);

}  // namespace rydsim

#endif
