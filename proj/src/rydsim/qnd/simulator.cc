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

#include "rydsim/qnd/simulator.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "rydsim/util/hash.h"

namespace rydsim {

namespace {

using Cd = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

enum Status : int { kPresent = 0, kLost = 1, kLeaked = 2 };

constexpr uint64_t kTrajectoryStream = 0x716e64;

const std::array<Mat2, 4> &paulis() {
    static const std::array<Mat2, 4> p = [] {
        std::array<Mat2, 4> out;
        out[0] << 1, 0, 0, 1;
        out[1] << 0, 1, 1, 0;
        out[2] << 0, Cd(0, -1), Cd(0, 1), 0;
        out[3] << 1, 0, 0, -1;
        return out;
    }();
    return p;
}

Mat2 rotation(double theta, double phi) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    Mat2 m;
    m << c, Cd(0, -1) * s * std::polar(1.0, -phi), Cd(0, -1) * s * std::polar(1.0, phi), c;
    return m;
}

Mat2 rz(double theta) {
    Mat2 m;
    m << std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2);
    return m;
}

int bit_of(int n, int qubit) { return n - 1 - qubit; }

// Applies a single-qubit operator to column vectors (or matrix columns).
template <typename M>
void apply_left(M &target, int n, int qubit, const Mat2 &u) {
    int mask = 1 << bit_of(n, qubit);
    int dim = 1 << n;
    for (int col = 0; col < target.cols(); col++) {
        for (int i = 0; i < dim; i++) {
            if (i & mask) {
                continue;
            }
            Cd a = target(i, col);
            Cd b = target(i | mask, col);
            target(i, col) = u(0, 0) * a + u(0, 1) * b;
            target(i | mask, col) = u(1, 0) * a + u(1, 1) * b;
        }
    }
}

void apply_unitary(Eigen::MatrixXcd &rho, int n, int qubit, const Mat2 &u) {
    apply_left(rho, n, qubit, u);
    Eigen::MatrixXcd t = rho.adjoint();
    apply_left(t, n, qubit, u);
    rho = t.adjoint();
}

double cz_sign(int n, int a, int b, int index) {
    int ma = 1 << bit_of(n, a);
    int mb = 1 << bit_of(n, b);
    return ((index & ma) && (index & mb)) ? -1.0 : 1.0;
}

void apply_cz(Eigen::MatrixXcd &rho, int n, int a, int b) {
    for (int i = 0; i < rho.rows(); i++) {
        for (int j = 0; j < rho.cols(); j++) {
            rho(i, j) *= cz_sign(n, a, b, i) * cz_sign(n, a, b, j);
        }
    }
}

Eigen::MatrixXcd one_qubit_depolarize(const Eigen::MatrixXcd &rho, int n, int q, double sigma) {
    Eigen::MatrixXcd out = (1 - sigma) * rho;
    for (const auto &p : paulis()) {
        Eigen::MatrixXcd t = rho;
        apply_unitary(t, n, q, p);
        out += sigma / 4 * t;
    }
    return out;
}

Eigen::MatrixXcd two_qubit_depolarize(const Eigen::MatrixXcd &rho, int n, int a, int b, double sigma) {
    Eigen::MatrixXcd out = (1 - sigma) * rho;
    for (const auto &pa : paulis()) {
        for (const auto &pb : paulis()) {
            Eigen::MatrixXcd t = rho;
            apply_unitary(t, n, a, pa);
            apply_unitary(t, n, b, pb);
            out += sigma / 16 * t;
        }
    }
    return out;
}

int parse_input(const PlaquetteCircuit &c, const BasisInput &input) {
    int n = static_cast<int>(c.qubits.size());
    if (static_cast<int>(input.size()) != n) {
        throw std::invalid_argument("input '" + input + "' must give one bit per qubit");
    }
    int index = 0;
    for (char ch : input) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("input '" + input + "' must contain only 0 and 1");
        }
        index = 2 * index + (ch - '0');
    }
    return index;
}

int readout(const PlaquetteCircuit &c, int index, const std::vector<int> &status) {
    int n = static_cast<int>(c.qubits.size());
    int outcome = 0;
    for (int q : c.measured) {
        int bit;
        if (status[q] == kLost) {
            bit = 1;
        } else if (status[q] == kLeaked) {
            bit = 0;
        } else {
            bit = (index >> bit_of(n, q)) & 1;
        }
        outcome = 2 * outcome + bit;
    }
    return outcome;
}

}  // namespace

void NoiseChannelParams::validate() const {
    auto prob = [](double p) { return p >= 0 && p <= 1; };
    if (!prob(depolarizing) || !prob(leak) || !prob(loss) || leak + loss > 1) {
        throw std::invalid_argument("noise probabilities must lie in [0, 1] with leak + loss <= 1.");
    }
    if (spam.empty()) {
        throw std::invalid_argument("spam needs at least one value.");
    }
    for (double s : spam) {
        if (!prob(s)) {
            throw std::invalid_argument("spam probabilities must lie in [0, 1].");
        }
    }
}

double NoiseChannelParams::spam_for(int qubit) const {
    if (spam.size() == 1) {
        return spam[0];
    }
    if (qubit >= static_cast<int>(spam.size())) {
        throw std::invalid_argument("no spam value for qubit " + std::to_string(qubit));
    }
    return spam[qubit];
}

OutcomeDistribution exact_distribution(
    const PlaquetteCircuit &circuit, const NoiseChannelParams &noise, const BasisInput &input) {
    circuit.validate();
    noise.validate();
    int n = static_cast<int>(circuit.qubits.size());
    int dim = 1 << n;
    int start = parse_input(circuit, input);

    std::map<std::vector<int>, Eigen::MatrixXcd> branches;
    Eigen::MatrixXcd rho0 = Eigen::MatrixXcd::Zero(dim, dim);
    rho0(start, start) = 1.0;
    branches[std::vector<int>(n, kPresent)] = rho0;

    auto add = [](std::map<std::vector<int>, Eigen::MatrixXcd> &into, const std::vector<int> &status,
                  const Eigen::MatrixXcd &rho) {
        auto it = into.find(status);
        if (it == into.end()) {
            into.emplace(status, rho);
        } else {
            it->second += rho;
        }
    };

    for (const auto &g : circuit.gates) {
        if (g.kind == GateKind::kGlobalRotation || g.kind == GateKind::kRz) {
            Mat2 u = g.kind == GateKind::kRz ? rz(g.theta) : rotation(g.theta, g.phi);
            for (auto &[status, rho] : branches) {
                for (int q : g.targets) {
                    apply_unitary(rho, n, q, u);
                }
            }
            continue;
        }
        int a = g.targets[0];
        int b = g.targets[1];
        std::map<std::vector<int>, Eigen::MatrixXcd> next;
        for (auto &[status, rho] : branches) {
            if (status[a] != kPresent || status[b] != kPresent) {
                add(next, status, rho);
                continue;
            }
            Eigen::MatrixXcd r = rho;
            apply_cz(r, n, a, b);
            for (int q : {a, b}) {
                for (auto [kind, p] : {std::pair{kLost, noise.loss}, std::pair{kLeaked, noise.leak}}) {
                    if (p > 0) {
                        std::vector<int> s = status;
                        s[q] = kind;
                        add(next, s, 0.5 * p * r);
                    }
                }
            }
            double keep = 1 - noise.loss - noise.leak;
            if (keep > 0) {
                Eigen::MatrixXcd d;
                if (noise.mode == DepolarizingMode::kTwoQubit) {
                    d = two_qubit_depolarize(r, n, a, b, noise.depolarizing);
                } else {
                    d = one_qubit_depolarize(one_qubit_depolarize(r, n, a, noise.depolarizing), n, b, noise.depolarizing);
                }
                add(next, status, keep * d);
            }
        }
        branches = std::move(next);
    }

    size_t outcomes = size_t{1} << circuit.measured.size();
    OutcomeDistribution out;
    out.probabilities.assign(outcomes, 0.0);
    for (const auto &[status, rho] : branches) {
        bool intact = std::all_of(status.begin(), status.end(), [](int s) { return s == kPresent; });
        for (int i = 0; i < dim; i++) {
            double p = rho(i, i).real();
            out.probabilities[readout(circuit, i, status)] += p;
            if (!intact) {
                out.loss_or_leak += p;
            }
        }
    }
    int m = static_cast<int>(circuit.measured.size());
    for (int j = 0; j < m; j++) {
        double s = noise.spam_for(circuit.measured[j]);
        if (s == 0) {
            continue;
        }
        size_t mask = size_t{1} << (m - 1 - j);
        std::vector<double> flipped(outcomes);
        for (size_t o = 0; o < outcomes; o++) {
            flipped[o] = (1 - s) * out.probabilities[o] + s * out.probabilities[o ^ mask];
        }
        out.probabilities = std::move(flipped);
    }
    return out;
}

std::vector<long> sample_histogram(
    const PlaquetteCircuit &circuit, const NoiseChannelParams &noise, const BasisInput &input, long shots,
    uint64_t seed) {
    circuit.validate();
    noise.validate();
    int n = static_cast<int>(circuit.qubits.size());
    int dim = 1 << n;
    int start = parse_input(circuit, input);
    int m = static_cast<int>(circuit.measured.size());
    std::vector<long> counts(size_t{1} << m, 0);

    // Gate matrices do not change between shots.
    std::vector<Mat2> unitaries;
    for (const auto &g : circuit.gates) {
        unitaries.push_back(g.kind == GateKind::kRz ? rz(g.theta) : rotation(g.theta, g.phi));
    }

    for (long shot = 0; shot < shots; shot++) {
        std::mt19937_64 rng(stream_seed(seed, kTrajectoryStream, static_cast<uint64_t>(shot)));
        std::uniform_real_distribution<double> uniform(0.0, 1.0);
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
        psi[start] = 1.0;
        std::vector<int> status(n, kPresent);
        for (size_t gi = 0; gi < circuit.gates.size(); gi++) {
            const auto &g = circuit.gates[gi];
            if (g.kind != GateKind::kCz) {
                for (int q : g.targets) {
                    apply_left(psi, n, q, unitaries[gi]);
                }
                continue;
            }
            int a = g.targets[0];
            int b = g.targets[1];
            if (status[a] != kPresent || status[b] != kPresent) {
                continue;
            }
            for (int i = 0; i < dim; i++) {
                psi[i] *= cz_sign(n, a, b, i);
            }
            double u = uniform(rng);
            int which = uniform(rng) < 0.5 ? a : b;
            if (u < noise.loss) {
                status[which] = kLost;
            } else if (u < noise.loss + noise.leak) {
                status[which] = kLeaked;
            } else if (noise.mode == DepolarizingMode::kTwoQubit) {
                if (uniform(rng) < noise.depolarizing) {
                    int k = static_cast<int>(uniform(rng) * 16) & 15;
                    apply_left(psi, n, a, paulis()[k / 4]);
                    apply_left(psi, n, b, paulis()[k % 4]);
                }
            } else {
                for (int q : {a, b}) {
                    if (uniform(rng) < noise.depolarizing) {
                        int k = static_cast<int>(uniform(rng) * 4) & 3;
                        apply_left(psi, n, q, paulis()[k]);
                    }
                }
            }
        }
        double r = uniform(rng);
        int index = dim - 1;
        double acc = 0;
        for (int i = 0; i < dim; i++) {
            acc += std::norm(psi[i]);
            if (r < acc) {
                index = i;
                break;
            }
        }
        int outcome = readout(circuit, index, status);
        for (int j = 0; j < m; j++) {
            if (uniform(rng) < noise.spam_for(circuit.measured[j])) {
                outcome ^= 1 << (m - 1 - j);
            }
        }
        counts[outcome]++;
    }
    return counts;
}

int ideal_outcome(const PlaquetteCircuit &circuit, const BasisInput &input) {
    NoiseChannelParams none;
    OutcomeDistribution d = exact_distribution(circuit, none, input);
    for (size_t o = 0; o < d.probabilities.size(); o++) {
        if (d.probabilities[o] > 1 - 1e-9) {
            return static_cast<int>(o);
        }
    }
    throw CircuitError("noiseless circuit output for input " + input + " is not a single bitstring");
}

std::vector<BasisInput> default_inputs(const PlaquetteCircuit &circuit) {
    std::vector<int> data = circuit.data_qubits();
    std::vector<BasisInput> out;
    for (int v = 0; v < (1 << data.size()); v++) {
        BasisInput s(circuit.qubits.size(), '0');
        for (size_t k = 0; k < data.size(); k++) {
            if ((v >> (data.size() - 1 - k)) & 1) {
                s[data[k]] = '1';
            }
        }
        out.push_back(s);
    }
    return out;
}

double predicted_fqnd(
    const PlaquetteCircuit &circuit, const NoiseChannelParams &noise, const std::vector<BasisInput> &inputs) {
    if (inputs.empty()) {
        throw std::invalid_argument("at least one input is required.");
    }
    double total = 0;
    for (const auto &in : inputs) {
        total += exact_distribution(circuit, noise, in).probabilities[ideal_outcome(circuit, in)];
    }
    return total / static_cast<double>(inputs.size());
}

std::string outcome_label(const PlaquetteCircuit &circuit, int outcome) {
    int m = static_cast<int>(circuit.measured.size());
    std::string s(m, '0');
    for (int j = 0; j < m; j++) {
        if ((outcome >> (m - 1 - j)) & 1) {
            s[j] = '1';
        }
    }
    return s;
}

}  // namespace rydsim
