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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "rydsim/testing/paths.h"

namespace rydsim {

namespace {

PlaquetteCircuit zz3() { return load_circuit(source_path("circuits/zz3.circ")); }
PlaquetteCircuit qnd2() { return load_circuit(source_path("circuits/qnd2_rb_ancilla.circ")); }

NoiseChannelParams noisy() {
    NoiseChannelParams n;
    n.depolarizing = 0.05;
    n.leak = 0.01;
    n.loss = 0.02;
    n.spam = {0.01, 0.02, 0.03};
    return n;
}

double total(const std::vector<double> &p) { return std::accumulate(p.begin(), p.end(), 0.0); }

}  // namespace

TEST(simulator, noiseless_two_atom_reports_data) {
    PlaquetteCircuit c = qnd2();
    EXPECT_EQ(ideal_outcome(c, "00"), 0b00);
    EXPECT_EQ(ideal_outcome(c, "01"), 0b11);
    OutcomeDistribution d = exact_distribution(c, {}, "00");
    EXPECT_NEAR(d.probabilities[0], 1.0, 1e-12);
    EXPECT_EQ(outcome_label(c, 0b11), "11");
}

TEST(simulator, odd_parity_flips_ancilla) {
    PlaquetteCircuit c = zz3();
    EXPECT_EQ(ideal_outcome(c, "000"), 0b000);
    EXPECT_EQ(ideal_outcome(c, "001"), 0b101);
    EXPECT_EQ(ideal_outcome(c, "010"), 0b110);
    EXPECT_EQ(ideal_outcome(c, "011"), 0b011);
}

TEST(simulator, default_inputs_enumerate_data) {
    EXPECT_EQ(default_inputs(zz3()), (std::vector<BasisInput>{"000", "001", "010", "011"}));
    EXPECT_EQ(default_inputs(qnd2()), (std::vector<BasisInput>{"00", "01"}));
}

TEST(simulator, ideal_outcome_rejects_superpositions) {
    PlaquetteCircuit c = parse_circuit("qubit a Rb ancilla\nqubit d Cs\nR Rb pi/2 0\nmeasure a\n");
    EXPECT_THROW(ideal_outcome(c, "00"), CircuitError);
}

TEST(simulator, exact_probabilities_sum_to_one) {
    for (DepolarizingMode mode : {DepolarizingMode::kTwoQubit, DepolarizingMode::kOneQubitEach}) {
        NoiseChannelParams n = noisy();
        n.mode = mode;
        for (const auto &in : default_inputs(zz3())) {
            OutcomeDistribution d = exact_distribution(zz3(), n, in);
            EXPECT_NEAR(total(d.probabilities), 1.0, 1e-12);
            EXPECT_GT(d.loss_or_leak, 0.0);
            for (double p : d.probabilities) {
                EXPECT_GE(p, -1e-15);
            }
        }
    }
}

TEST(simulator, loss_only_reads_dark) {
    // One CZ, loss always: one of the pair (uniformly) is lost and reads 1.
    NoiseChannelParams n;
    n.loss = 1.0;
    OutcomeDistribution d = exact_distribution(qnd2(), n, "00");
    EXPECT_NEAR(d.loss_or_leak, 1.0, 1e-15);
    // Data lost: ancilla saw no CZ phase, rotates back to 0 -> "01".
    EXPECT_NEAR(d.probabilities[0b01], 0.5, 1e-12);
    EXPECT_NEAR(d.probabilities[0b10], 0.5, 1e-12);
}

TEST(simulator, leak_only_reads_bright) {
    NoiseChannelParams n;
    n.leak = 1.0;
    OutcomeDistribution d = exact_distribution(qnd2(), n, "01");
    // Leaked data reads 0; leaked ancilla reads 0 and the data stays 1.
    EXPECT_NEAR(d.probabilities[0b00] + d.probabilities[0b10], 0.5, 1e-12);
    EXPECT_NEAR(d.probabilities[0b01], 0.5, 1e-12);
}

TEST(simulator, spam_flips_each_bit) {
    NoiseChannelParams n;
    n.spam = {0.1, 0.2};
    OutcomeDistribution d = exact_distribution(qnd2(), n, "00");
    EXPECT_NEAR(d.probabilities[0b00], 0.9 * 0.8, 1e-12);
    EXPECT_NEAR(d.probabilities[0b10], 0.1 * 0.8, 1e-12);
    EXPECT_NEAR(d.probabilities[0b01], 0.9 * 0.2, 1e-12);
}

TEST(simulator, two_qubit_depolarizing_closed_form) {
    // With sigma after the single CZ, the pair is replaced by I/4 with
    // probability sigma: the ideal outcome keeps 1 - 3 sigma / 4.
    NoiseChannelParams n;
    n.depolarizing = 0.08;
    OutcomeDistribution d = exact_distribution(qnd2(), n, "01");
    EXPECT_NEAR(d.probabilities[0b11], 1 - 0.75 * 0.08, 1e-12);
}

TEST(simulator, histogram_sums_to_shots) {
    auto h = sample_histogram(zz3(), noisy(), "011", 12345, 3);
    EXPECT_EQ(std::accumulate(h.begin(), h.end(), 0L), 12345);
    EXPECT_EQ(h.size(), 8u);
}

TEST(simulator, histogram_deterministic_in_seed) {
    auto a = sample_histogram(zz3(), noisy(), "001", 2000, 5);
    auto b = sample_histogram(zz3(), noisy(), "001", 2000, 5);
    auto c = sample_histogram(zz3(), noisy(), "001", 2000, 6);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
}

TEST(simulator, trajectories_match_exact_channel) {
    const long shots = 100000;
    for (DepolarizingMode mode : {DepolarizingMode::kTwoQubit, DepolarizingMode::kOneQubitEach}) {
        NoiseChannelParams n = noisy();
        n.mode = mode;
        for (const auto &in : default_inputs(zz3())) {
            auto exact = exact_distribution(zz3(), n, in).probabilities;
            auto h = sample_histogram(zz3(), n, in, shots, 17);
            for (size_t k = 0; k < exact.size(); k++) {
                double mean = shots * exact[k];
                double sd = std::sqrt(shots * exact[k] * (1 - exact[k]));
                EXPECT_LE(std::abs(h[k] - mean), 4 * sd + 1e-9) << in << " outcome " << k;
            }
        }
    }
}

TEST(simulator, fqnd_one_without_noise) {
    EXPECT_NEAR(predicted_fqnd(zz3(), {}, default_inputs(zz3())), 1.0, 1e-12);
    EXPECT_NEAR(predicted_fqnd(qnd2(), {}, default_inputs(qnd2())), 1.0, 1e-12);
}

TEST(simulator, fqnd_monotone_in_depolarizing) {
    for (PlaquetteCircuit c : {qnd2(), zz3()}) {
        double prev = 2.0;
        for (int i = 0; i <= 20; i++) {
            NoiseChannelParams n;
            n.depolarizing = 0.005 * i;
            double f = predicted_fqnd(c, n, default_inputs(c));
            EXPECT_LE(f, prev + 1e-15);
            prev = f;
        }
    }
}

TEST(simulator, three_atom_below_two_atom) {
    NoiseChannelParams n;
    n.depolarizing = 0.025;
    double f2 = predicted_fqnd(qnd2(), n, default_inputs(qnd2()));
    double f2cs = predicted_fqnd(
        load_circuit(source_path("circuits/qnd2_cs_ancilla.circ")), n, {"00", "01"});
    double f3 = predicted_fqnd(zz3(), n, default_inputs(zz3()));
    EXPECT_LT(f3, f2);
    EXPECT_LT(f3, f2cs);
}

TEST(simulator, relabeling_data_permutes_histogram) {
    PlaquetteCircuit a = zz3();
    PlaquetteCircuit b = parse_circuit(
        "qubit a Rb ancilla\nqubit d0 Cs data\nqubit d1 Cs data\n"
        // Measuring d1 before d0 maps each outcome index onto itself.
        "R Rb pi/2 pi/2\nCZ a d1\nCZ a d0\nR Rb pi/2 -pi/2\nmeasure a d1 d0\n");
    NoiseChannelParams n = noisy();
    n.spam = {0.01, 0.02, 0.02};
    for (const std::string in : {"001", "010", "011"}) {
        std::string swapped = {in[0], in[2], in[1]};
        auto pa = exact_distribution(a, n, in).probabilities;
        auto pb = exact_distribution(b, n, swapped).probabilities;
        for (int k = 0; k < 8; k++) {
            EXPECT_NEAR(pb[k], pa[k], 1e-12) << in << " " << k;
        }
        auto ha = sample_histogram(a, n, in, 3000, 9);
        auto hb = sample_histogram(b, n, swapped, 3000, 9);
        for (int k = 0; k < 8; k++) {
            EXPECT_EQ(hb[k], ha[k]) << in << " " << k;
        }
    }
}

TEST(simulator, noise_params_validated) {
    NoiseChannelParams n;
    n.depolarizing = 1.5;
    EXPECT_THROW(n.validate(), std::invalid_argument);
    n = {};
    n.loss = 0.6;
    n.leak = 0.6;
    EXPECT_THROW(n.validate(), std::invalid_argument);
    n = {};
    n.spam = {0.1, 0.2};
    EXPECT_EQ(n.spam_for(1), 0.2);
    EXPECT_THROW(exact_distribution(zz3(), n, "000"), std::invalid_argument);
    EXPECT_THROW(exact_distribution(zz3(), {}, "00"), std::invalid_argument);
}

}  // namespace rydsim
