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

#include "rydsim/gate/evolve.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "rydsim/util/units.h"

namespace rydsim {

namespace {

// Yoshida triple-jump weights for a symmetric second-order base step.
const double kCbrt2 = std::cbrt(2.0);
const double kW1 = 1.0 / (2.0 - kCbrt2);
const double kW0 = -kCbrt2 / (2.0 - kCbrt2);

void apply_diagonal(std::array<Complex, 9> &psi, const std::array<Complex, 9> &factors) {
    for (size_t i = 0; i < 9; i++) {
        psi[i] *= factors[i];
    }
}

std::array<Complex, 9> diagonal_propagator(const std::array<Complex, 9> &diag, double tau) {
    std::array<Complex, 9> out{};
    for (size_t i = 0; i < 9; i++) {
        out[i] = std::exp(Complex(0.0, -tau) * diag[i]);
    }
    return out;
}

// Exact exp(-i tau V) for the drive couplings at time t. The atom A and atom B
// couplings commute, so they are applied one after the other.
void apply_couplings(
    std::array<Complex, 9> &psi, const AtomDriveSpec &a, const AtomDriveSpec &b, double t, double tau) {
    if (a.rabi_two_photon != 0.0) {
        double theta = 0.5 * a.rabi_two_photon * tau;
        Complex e = std::polar(1.0, a.phase_at(t));
        Complex cos_t(std::cos(theta), 0.0);
        Complex isin(0.0, -std::sin(theta));
        for (Level other : kLevels) {
            Complex &p1 = psi[state_index(Level::kOne, other)];
            Complex &pr = psi[state_index(Level::kRydberg, other)];
            Complex n1 = cos_t * p1 + isin * e * pr;
            Complex nr = isin * std::conj(e) * p1 + cos_t * pr;
            p1 = n1;
            pr = nr;
        }
    }
    if (b.rabi_two_photon != 0.0) {
        double theta = 0.5 * b.rabi_two_photon * tau;
        Complex e = std::polar(1.0, b.phase_at(t));
        Complex cos_t(std::cos(theta), 0.0);
        Complex isin(0.0, -std::sin(theta));
        for (Level other : kLevels) {
            Complex &p1 = psi[state_index(other, Level::kOne)];
            Complex &pr = psi[state_index(other, Level::kRydberg)];
            Complex n1 = cos_t * p1 + isin * e * pr;
            Complex nr = isin * std::conj(e) * p1 + cos_t * pr;
            p1 = n1;
            pr = nr;
        }
    }
}

double norm_squared(const std::array<Complex, 9> &psi) {
    double total = 0.0;
    for (const auto &c : psi) {
        total += std::norm(c);
    }
    return total;
}

}  // namespace

double resolve_step(
    const AtomDriveSpec &a, const AtomDriveSpec &b, double blockade, double duration, const StepControl &control) {
    double bound = control.max_step;
    if (bound <= 0.0) {
        double fastest = std::max({a.rabi_two_photon, b.rabi_two_photon, std::abs(a.two_photon_detuning),
                                   std::abs(b.two_photon_detuning), std::abs(blockade)});
        bound = fastest > 0.0 ? kTwoPi / (control.samples_per_period * fastest) : duration;
    }
    if (duration <= 0.0) {
        return 0.0;
    }
    double steps = std::ceil(duration / bound);
    if (!(bound >= control.min_step) || steps > static_cast<double>(control.max_steps)) {
        throw IntegrationError("evolve: step-size underflow (required step " + std::to_string(bound) + " s)");
    }
    return duration / steps;
}

TwoAtomState evolve(
    const TwoAtomState &state, const AtomDriveSpec &a, const AtomDriveSpec &b, double blockade, double duration,
    const StepControl &control, double t0, const EvolutionObserver &observer) {
    a.validate();
    b.validate();
    if (!std::isfinite(blockade) || !std::isfinite(duration) || duration < 0.0) {
        throw std::invalid_argument("evolve: blockade and duration must be finite, duration >= 0");
    }
    TwoAtomState out = state;
    if (observer) {
        observer(t0, out);
    }
    if (duration == 0.0) {
        return out;
    }
    double h = resolve_step(a, b, blockade, duration, control);
    long steps = std::lround(duration / h);

    auto diag = hamiltonian_diagonal(a, b, blockade);
    auto edge = diagonal_propagator(diag, 0.5 * kW1 * h);
    auto inner = diagonal_propagator(diag, 0.5 * (kW1 + kW0) * h);

    auto &psi = out.amplitudes;
    double norm = norm_squared(psi);
    for (long k = 0; k < steps; k++) {
        double t = t0 + static_cast<double>(k) * h;
        apply_diagonal(psi, edge);
        apply_couplings(psi, a, b, t + 0.5 * kW1 * h, kW1 * h);
        apply_diagonal(psi, inner);
        apply_couplings(psi, a, b, t + 0.5 * h, kW0 * h);
        apply_diagonal(psi, inner);
        apply_couplings(psi, a, b, t + h - 0.5 * kW1 * h, kW1 * h);
        apply_diagonal(psi, edge);

        double next_norm = norm_squared(psi);
        if (!std::isfinite(next_norm)) {
            throw IntegrationError("evolve: non-finite amplitudes");
        }
        out.loss += std::max(0.0, norm - next_norm);
        norm = next_norm;
        if (observer) {
            observer(t + h, out);
        }
    }
    return out;
}

TwoAtomState evolve_adaptive_reference(
    const TwoAtomState &state, const AtomDriveSpec &a, const AtomDriveSpec &b, double blockade, double duration,
    const AdaptiveControl &control, double t0) {
    using Vec = Eigen::Matrix<Complex, 9, 1>;
    static constexpr double c[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
    static constexpr double A[7][6] = {
        {0, 0, 0, 0, 0, 0},
        {1.0 / 5, 0, 0, 0, 0, 0},
        {3.0 / 40, 9.0 / 40, 0, 0, 0, 0},
        {44.0 / 45, -56.0 / 15, 32.0 / 9, 0, 0, 0},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729, 0, 0},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656, 0},
        {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
    static constexpr double b5[7] = {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0};
    static constexpr double b4[7] = {5179.0 / 57600, 0, 7571.0 / 16695, 393.0 / 640,
                                     -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

    Vec y;
    for (size_t i = 0; i < 9; i++) {
        y[i] = state.amplitudes[i];
    }
    const double start_total = state.total_probability();
    auto rhs = [&](double t, const Vec &v) -> Vec {
        return Complex(0.0, -1.0) * (build_hamiltonian(a, b, blockade, t) * v);
    };

    double t = t0;
    const double t_end = t0 + duration;
    double h = std::min(control.initial_step, duration);
    long steps = 0;
    Vec k[7];
    while (t < t_end) {
        if (++steps > control.max_steps) {
            throw IntegrationError("evolve_adaptive_reference: too many steps");
        }
        h = std::min(h, t_end - t);
        k[0] = rhs(t, y);
        for (int s = 1; s < 7; s++) {
            Vec acc = y;
            for (int j = 0; j < s; j++) {
                acc += h * A[s][j] * k[j];
            }
            k[s] = rhs(t + c[s] * h, acc);
        }
        Vec y5 = y, y4 = y;
        for (int s = 0; s < 7; s++) {
            y5 += h * b5[s] * k[s];
            y4 += h * b4[s] * k[s];
        }
        double err = 0.0;
        for (int i = 0; i < 9; i++) {
            double scale = control.abs_tol + control.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err = std::max(err, std::abs(y5[i] - y4[i]) / scale);
        }
        if (err <= 1.0) {
            t += h;
            y = y5;
        }
        double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= factor;
        if (h < control.min_step && t < t_end) {
            throw IntegrationError("evolve_adaptive_reference: step-size underflow");
        }
    }
    TwoAtomState out;
    for (size_t i = 0; i < 9; i++) {
        out.amplitudes[i] = y[i];
    }
    out.loss = std::max(0.0, start_total - out.norm_squared());
    return out;
}

}  // namespace rydsim
