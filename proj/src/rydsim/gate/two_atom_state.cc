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

#include "rydsim/gate/two_atom_state.h"

#include <complex>

namespace rydsim {

TwoAtomState TwoAtomState::basis(Level a, Level b) {
    TwoAtomState s;
    s.at(a, b) = 1.0;
    return s;
}

double TwoAtomState::norm_squared() const {
    double total = 0.0;
    for (const auto &c : amplitudes) {
        total += std::norm(c);
    }
    return total;
}

TwoAtomState TwoAtomState::transposed() const {
    TwoAtomState out;
    out.loss = loss;
    for (Level a : kLevels) {
        for (Level b : kLevels) {
            out.at(b, a) = at(a, b);
        }
    }
    return out;
}

}  // namespace rydsim
