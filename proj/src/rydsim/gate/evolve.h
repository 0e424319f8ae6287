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

#ifndef RYDSIM_GATE_EVOLVE_H
#define RYDSIM_GATE_EVOLVE_H

#include <functional>
#include <stdexcept>

#include "rydsim/gate/hamiltonian.h"
#include "rydsim/gate/two_atom_state.h"

namespace rydsim {

/// Raised when the time integration cannot proceed (step-size underflow,
/// non-finite amplitudes).
class IntegrationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct StepControl {
    // Upper bound on the step (s). Zero means "derive from the fastest
    // frequency in the problem": 2 pi / (samples_per_period * max(Omega, |Delta|, |B|)).
    double max_step = 0.0;
    double samples_per_period = 50.0;
    // Steps smaller than this are treated as underflow.
    double min_step = 1e-16;
    long max_steps = 100'000'000;
};

/// Called at t0 and after every step with the current time and state.
using EvolutionObserver = std::function<void(double t, const TwoAtomState &state)>;

/// The step actually used for `duration` under `control` (duration divided
/// into equal steps no longer than the bound).
double resolve_step(
    const AtomDriveSpec &a, const AtomDriveSpec &b, double blockade, double duration, const StepControl &control);

/// Integrates i d(psi)/dt = H(t) psi from t0 to t0 + duration.
///
/// Fixed-step fourth-order scheme: the constant diagonal part of H (detuning,
/// blockade, decay) is applied exactly and the drive couplings are applied as
/// exact 2x2 rotations, composed as a symmetric Strang step and lifted to
/// fourth order with the Yoshida triple jump. With all decay rates zero each
/// step is unitary to rounding. Norm that leaves the manifold is added to
/// `loss`.
TwoAtomState evolve(
    const TwoAtomState &state, const AtomDriveSpec &a, const AtomDriveSpec &b, double blockade, double duration,
    const StepControl &control = {}, double t0 = 0.0, const EvolutionObserver &observer = nullptr);

struct AdaptiveControl {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double initial_step = 1e-10;
    double min_step = 1e-18;
    long max_steps = 50'000'000;
};

/// Independent reference: Dormand-Prince 5(4) with error control on the dense
/// matrix from build_hamiltonian. Slow; used to cross-check `evolve`.
TwoAtomState evolve_adaptive_reference(
    const TwoAtomState &state, const AtomDriveSpec &a, const AtomDriveSpec &b, double blockade, double duration,
    const AdaptiveControl &control = {}, double t0 = 0.0);

}  // namespace rydsim

#endif
