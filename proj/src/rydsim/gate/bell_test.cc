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

#include "rydsim/gate/bell_test.h"

#include <algorithm>
#include <cmath>

#include "rydsim/util/units.h"

namespace rydsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Ry(pi/2) on the {0,1} levels of one atom; |r> untouched.
void rotate_y_half_pi(TwoAtomState &state, int atom) {
    for (Level other : kLevels) {
        Complex &p0 = atom == 0 ? state.at(Level::kZero, other) : state.at(other, Level::kZero);
        Complex &p1 = atom == 0 ? state.at(Level::kOne, other) : state.at(other, Level::kOne);
        Complex n0 = kInvSqrt2 * (p0 - p1);
        Complex n1 = kInvSqrt2 * (p0 + p1);
        p0 = n0;
        p1 = n1;
    }
}

TwoAtomState prepared_state() {
    TwoAtomState s = TwoAtomState::basis(Level::kOne, Level::kOne);
    rotate_y_half_pi(s, 0);
    rotate_y_half_pi(s, 1);
    return s;
}

const TwoAtomState &ideal_bell_state() {
    static const TwoAtomState bell = [] {
        TwoAtomState s = prepared_state();
        s.at(Level::kOne, Level::kOne) *= -1.0;
        rotate_y_half_pi(s, 0);
        rotate_y_half_pi(s, 1);
        return s;
    }();
    return bell;
}

constexpr std::array<std::pair<Level, Level>, 4> kQubitBasis{
    std::pair{Level::kZero, Level::kZero}, std::pair{Level::kZero, Level::kOne},
    std::pair{Level::kOne, Level::kZero}, std::pair{Level::kOne, Level::kOne}};

Complex overlap(const TwoAtomState &bra, const TwoAtomState &ket) {
    Complex total = 0.0;
    for (size_t i = 0; i < 9; i++) {
        total += std::conj(bra.amplitudes[i]) * ket.amplitudes[i];
    }
    return total;
}

Complex diagonal_overlap(const std::array<Complex, 4> &d, double theta_a, double theta_b) {
    Complex phase_a = std::polar(1.0, -theta_a);
    Complex phase_b = std::polar(1.0, -theta_b);
    return 0.25 * (d[0] + d[1] * phase_b + d[2] * phase_a - d[3] * phase_a * phase_b);
}

}  // namespace

BellTestResult run_bell_test(
    const GateParams &gate, const AtomDriveSpec &a, const AtomDriveSpec &b, double blockade,
    const StepControl &control) {
    gate.validate();
    TwoAtomState initial = prepared_state();
    TwoAtomState state = evolve(initial, a, b, blockade, gate.duration, control);

    BellTestResult result;
    for (size_t k = 0; k < 4; k++) {
        auto [la, lb] = kQubitBasis[k];
        result.gate_diagonal[k] = state.at(la, lb) / initial.at(la, lb);
    }

    Complex rz_a = std::polar(1.0, -gate.virtual_rz[0]);
    Complex rz_b = std::polar(1.0, -gate.virtual_rz[1]);
    for (Level other : kLevels) {
        state.at(Level::kOne, other) *= rz_a;
        state.at(other, Level::kOne) *= rz_b;
    }
    rotate_y_half_pi(state, 0);
    rotate_y_half_pi(state, 1);

    result.error = std::clamp(1.0 - std::norm(overlap(ideal_bell_state(), state)), 0.0, 1.0);
    result.final_state = state;
    return result;
}

double bell_test_error(
    const GateParams &gate, const AtomDriveSpec &a, const AtomDriveSpec &b, double blockade,
    const StepControl &control) {
    return run_bell_test(gate, a, b, blockade, control).error;
}

double bell_test_error_for_unitary(const Eigen::Matrix4cd &gate) {
    TwoAtomState state = prepared_state();
    Eigen::Vector4cd v;
    for (size_t k = 0; k < 4; k++) {
        v[k] = state.at(kQubitBasis[k].first, kQubitBasis[k].second);
    }
    v = gate * v;
    for (size_t k = 0; k < 4; k++) {
        state.at(kQubitBasis[k].first, kQubitBasis[k].second) = v[k];
    }
    rotate_y_half_pi(state, 0);
    rotate_y_half_pi(state, 1);
    return std::clamp(1.0 - std::norm(overlap(ideal_bell_state(), state)), 0.0, 1.0);
}

double bell_error_from_diagonal(const std::array<Complex, 4> &diagonal, const std::array<double, 2> &virtual_rz) {
    return std::clamp(1.0 - std::norm(diagonal_overlap(diagonal, virtual_rz[0], virtual_rz[1])), 0.0, 1.0);
}

std::array<double, 2> optimal_virtual_rz(const std::array<Complex, 4> &d, RzMode mode) {
    double theta_a = std::arg(d[2]);
    double theta_b = std::arg(d[1]);
    if (mode == RzMode::kAnalytic) {
        return {theta_a, theta_b};
    }
    // Coordinate ascent: for a fixed partner phase the overlap is |X + Y e^{-i theta}|,
    // maximized in closed form at theta = arg(Y) - arg(X).
    for (int iter = 0; iter < 200; iter++) {
        double prev_a = theta_a;
        double prev_b = theta_b;
        Complex pb = std::polar(1.0, -theta_b);
        Complex x = d[0] + d[1] * pb;
        Complex y = d[2] - d[3] * pb;
        if (std::abs(x) > 0.0 && std::abs(y) > 0.0) {
            theta_a = std::arg(y) - std::arg(x);
        }
        Complex pa = std::polar(1.0, -theta_a);
        x = d[0] + d[2] * pa;
        y = d[1] - d[3] * pa;
        if (std::abs(x) > 0.0 && std::abs(y) > 0.0) {
            theta_b = std::arg(y) - std::arg(x);
        }
        if (std::abs(std::remainder(theta_a - prev_a, kTwoPi)) < 1e-15 &&
            std::abs(std::remainder(theta_b - prev_b, kTwoPi)) < 1e-15) {
            break;
        }
    }
    return {std::remainder(theta_a, kTwoPi), std::remainder(theta_b, kTwoPi)};
}

double decay_floor(
    const GateParams &gate, const AtomDriveSpec &a, const AtomDriveSpec &b, double blockade,
    const StepControl &control) {
    gate.validate();
    auto level_rate = [](const AtomDriveSpec &d, Level l) {
        switch (l) {
            case Level::kZero:
                return 0.0;
            case Level::kOne:
                return d.decay_rate_1;
            case Level::kRydberg:
                return d.total_rydberg_loss_rate();
        }
        return 0.0;
    };
    std::array<double, 9> rate{};
    std::array<size_t, 9> branch{};
    for (Level la : kLevels) {
        for (Level lb : kLevels) {
            size_t i = state_index(la, lb);
            rate[i] = level_rate(a, la) + level_rate(b, lb);
            branch[i] = 2 * (la == Level::kZero ? 0 : 1) + (lb == Level::kZero ? 0 : 1);
        }
    }

    AtomDriveSpec lossless_a = a;
    AtomDriveSpec lossless_b = b;
    for (AtomDriveSpec *d : {&lossless_a, &lossless_b}) {
        d->decay_rate_1 = 0.0;
        d->decay_rate_r = 0.0;
        d->rydberg_decay_rate = 0.0;
    }

    std::array<double, 4> integral{};
    std::array<double, 4> last{};
    double last_t = 0.0;
    bool first = true;
    auto observer = [&](double t, const TwoAtomState &s) {
        std::array<double, 4> current{};
        for (size_t i = 0; i < 9; i++) {
            current[branch[i]] += rate[i] * std::norm(s.amplitudes[i]);
        }
        if (!first) {
            for (size_t k = 0; k < 4; k++) {
                integral[k] += 0.5 * (t - last_t) * (current[k] + last[k]);
            }
        }
        first = false;
        last = current;
        last_t = t;
    };
    evolve(prepared_state(), lossless_a, lossless_b, blockade, gate.duration, control, 0.0, observer);

    // Each branch starts with weight 1/4, so L_k = 4 * integral_k.
    double amplitude = 0.0;
    for (size_t k = 0; k < 4; k++) {
        amplitude += 0.25 * std::exp(-0.5 * 4.0 * integral[k]);
    }
    return 1.0 - amplitude * amplitude;
}

}  // namespace rydsim
