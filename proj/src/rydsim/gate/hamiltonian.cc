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

#include "rydsim/gate/hamiltonian.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rydsim {

namespace {

void require_rate(double v, const char *name) {
    if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument(std::string("AtomDriveSpec: ") + name + " must be finite and >= 0");
    }
}

Complex level_energy(const AtomDriveSpec &d, Level level) {
    switch (level) {
        case Level::kZero:
            return 0.0;
        case Level::kOne:
            return Complex(0.0, -0.5 * d.decay_rate_1);
        case Level::kRydberg:
            return Complex(-d.two_photon_detuning, -0.5 * d.total_rydberg_loss_rate());
    }
    return 0.0;
}

}  // namespace

void AtomDriveSpec::validate() const {
    require_rate(rabi_two_photon, "rabi_two_photon");
    require_rate(decay_rate_1, "decay_rate_1");
    require_rate(decay_rate_r, "decay_rate_r");
    require_rate(rydberg_decay_rate, "rydberg_decay_rate");
    if (!std::isfinite(two_photon_detuning)) {
        throw std::invalid_argument("AtomDriveSpec: two_photon_detuning must be finite");
    }
}

std::array<Complex, 9> hamiltonian_diagonal(const AtomDriveSpec &a, const AtomDriveSpec &b, double blockade) {
    std::array<Complex, 9> d{};
    for (Level la : kLevels) {
        for (Level lb : kLevels) {
            Complex e = level_energy(a, la) + level_energy(b, lb);
            if (la == Level::kRydberg && lb == Level::kRydberg) {
                e += blockade;
            }
            d[state_index(la, lb)] = e;
        }
    }
    return d;
}

Matrix9cd build_hamiltonian(const AtomDriveSpec &a, const AtomDriveSpec &b, double blockade, double t) {
    a.validate();
    b.validate();
    if (!std::isfinite(blockade) || !std::isfinite(t)) {
        throw std::invalid_argument("build_hamiltonian: blockade and time must be finite");
    }
    Matrix9cd h = Matrix9cd::Zero();
    auto diag = hamiltonian_diagonal(a, b, blockade);
    for (size_t i = 0; i < 9; i++) {
        h(i, i) = diag[i];
    }
    Complex ca = 0.5 * a.rabi_two_photon * std::polar(1.0, a.phase_at(t));
    Complex cb = 0.5 * b.rabi_two_photon * std::polar(1.0, b.phase_at(t));
    for (Level other : kLevels) {
        size_t one_a = state_index(Level::kOne, other);
        size_t ryd_a = state_index(Level::kRydberg, other);
        h(one_a, ryd_a) += ca;
        h(ryd_a, one_a) += std::conj(ca);
        size_t one_b = state_index(other, Level::kOne);
        size_t ryd_b = state_index(other, Level::kRydberg);
        h(one_b, ryd_b) += cb;
        h(ryd_b, one_b) += std::conj(cb);
    }
    return h;
}

}  // namespace rydsim
