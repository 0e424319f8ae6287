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

#ifndef RYDSIM_GATE_TWO_ATOM_STATE_H
#define RYDSIM_GATE_TWO_ATOM_STATE_H

#include <array>
#include <complex>
#include <cstddef>

namespace rydsim {

using Complex = std::complex<double>;

/// Single-atom levels: the two hyperfine qubit states and the Rydberg state.
enum class Level : size_t { kZero = 0, kOne = 1, kRydberg = 2 };

inline constexpr std::array<Level, 3> kLevels{Level::kZero, Level::kOne, Level::kRydberg};

/// Flat index of |a b> in the 9-dimensional product basis (atom A major).
constexpr size_t state_index(Level a, Level b) { return 3 * static_cast<size_t>(a) + static_cast<size_t>(b); }

/// Two-atom amplitudes over {0,1,r} x {0,1,r} plus the probability that has
/// left the three-level manifold through non-Hermitian decay.
struct TwoAtomState {
    std::array<Complex, 9> amplitudes{};
    double loss = 0.0;

    static TwoAtomState basis(Level a, Level b);

    Complex &at(Level a, Level b) { return amplitudes[state_index(a, b)]; }
    const Complex &at(Level a, Level b) const { return amplitudes[state_index(a, b)]; }

    double norm_squared() const;
    double total_probability() const { return norm_squared() + loss; }

    /// Swaps the roles of atom A and atom B.
    TwoAtomState transposed() const;
};

}  // namespace rydsim

#endif
