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

#include "rydsim/trap/trap_physics.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "rydsim/util/units.h"

namespace rydsim {

namespace {

void require_positive(double value, const char *name) {
    if (!(value > 0) || !std::isfinite(value)) {
        throw std::invalid_argument(std::string(name) + " must be positive and finite.");
    }
}

void require_non_negative(double value, const char *name) {
    if (!(value >= 0) || !std::isfinite(value)) {
        throw std::invalid_argument(std::string(name) + " must be non-negative and finite.");
    }
}

struct HermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Golub-Welsch for the probabilists' weight exp(-x^2/2)/sqrt(2 pi), so the
// weights sum to one and E[f(X)] ~ sum w_i f(x_i) for X ~ N(0,1).
HermiteRule normal_hermite_rule(int n) {
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; k++) {
        double off = std::sqrt(static_cast<double>(k));
        jacobi(k, k - 1) = off;
        jacobi(k - 1, k) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    HermiteRule rule;
    for (int k = 0; k < n; k++) {
        rule.nodes.push_back(solver.eigenvalues()(k));
        double v = solver.eigenvectors()(0, k);
        rule.weights.push_back(v * v);
    }
    return rule;
}

}  // namespace

void TrapSpec::validate() const {
    require_positive(waist_um, "trap waist");
    require_positive(wavelength_nm, "trap wavelength");
    require_positive(depth_mk, "trap depth");
    require_non_negative(temperature_uk, "atom temperature");
    require_non_negative(power_mw, "trap power");
}

double adiabatic_temperature(double t_initial_uk, double u_initial, double u_final) {
    require_non_negative(t_initial_uk, "initial temperature");
    require_positive(u_initial, "initial trap depth");
    require_positive(u_final, "final trap depth");
    return t_initial_uk * std::sqrt(u_final / u_initial);
}

LocalizationSigmas localization_sigmas(const TrapSpec &trap) {
    trap.validate();
    // T in uK, U in mK.
    double ratio = trap.temperature_uk * 1e-3 / trap.depth_mk;
    double root = std::sqrt(ratio);
    double wavelength_um = trap.wavelength_nm * 1e-3;
    LocalizationSigmas out;
    out.radial_um = 0.5 * trap.waist_um * root;
    out.axial_um = kPi * trap.waist_um * trap.waist_um / (std::sqrt(2.0) * wavelength_um) * root;
    out.outside_harmonic_regime = ratio >= 1.0;
    return out;
}

double trap_depth_mk(double power_mw, double waist_um, double polarizability_au) {
    require_non_negative(power_mw, "trap power");
    require_positive(waist_um, "trap waist");
    require_non_negative(polarizability_au, "trap polarizability");
    double w = waist_um * 1e-6;
    double peak_intensity = 2.0 * power_mw * 1e-3 / (kPi * w * w);
    double alpha = polarizability_au * kAtomicUnitPolarizability;
    double depth_joule = alpha * peak_intensity / (2.0 * kVacuumPermittivity * kSpeedOfLight);
    return depth_joule / kBoltzmann * 1e3;
}

BlockadeModel BlockadeModel::calibrated(double blockade_mhz, double separation_um) {
    require_non_negative(blockade_mhz, "reference blockade");
    require_positive(separation_um, "reference separation");
    BlockadeModel model;
    model.reference_blockade_mhz = blockade_mhz;
    model.reference_separation_um = separation_um;
    model.c6_mhz_um6 = blockade_mhz * std::pow(separation_um, 6);
    return model;
}

double blockade_point(const BlockadeModel &model, double r_um) {
    require_positive(r_um, "separation");
    if (r_um == model.reference_separation_um) {
        return model.reference_blockade_mhz;
    }
    double r2 = r_um * r_um;
    return model.c6_mhz_um6 / (r2 * r2 * r2);
}

AverageBlockade average_blockade(
    const PositionDistribution &atom1, const PositionDistribution &atom2, const BlockadeModel &model,
    long max_samples, uint64_t seed, double target_relative_error) {
    if (max_samples < 2) {
        throw std::invalid_argument("average_blockade needs at least two samples.");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    double sum = 0;
    double sum_sq = 0;
    AverageBlockade out;
    long n = 0;
    const long check_every = 1 << 14;
    while (n < max_samples) {
        double r2 = 0;
        for (int k = 0; k < 3; k++) {
            double x1 = atom1.mean[k] + atom1.sigma[k] * normal(rng);
            double x2 = atom2.mean[k] + atom2.sigma[k] * normal(rng);
            r2 += (x2 - x1) * (x2 - x1);
        }
        double b = model.c6_mhz_um6 / (r2 * r2 * r2);
        sum += b;
        sum_sq += b * b;
        n++;
        if (target_relative_error > 0 && n % check_every == 0) {
            double mean = sum / n;
            double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1));
            if (std::sqrt(var / n) <= target_relative_error * std::abs(mean)) {
                break;
            }
        }
    }
    out.samples = n;
    out.mean_mhz = sum / n;
    double var = std::max(0.0, (sum_sq - n * out.mean_mhz * out.mean_mhz) / (n - 1));
    out.standard_error_mhz = std::sqrt(var / n);
    if (target_relative_error > 0) {
        out.converged = out.standard_error_mhz <= target_relative_error * std::abs(out.mean_mhz);
    }
    return out;
}

AverageBlockade average_blockade_quadrature(
    const PositionDistribution &atom1, const PositionDistribution &atom2, const BlockadeModel &model,
    int nodes_per_axis) {
    if (nodes_per_axis < 1) {
        throw std::invalid_argument("nodes_per_axis must be positive.");
    }
    HermiteRule rule = normal_hermite_rule(nodes_per_axis);
    std::array<double, 3> mu;
    std::array<double, 3> sd;
    for (int k = 0; k < 3; k++) {
        mu[k] = atom2.mean[k] - atom1.mean[k];
        sd[k] = std::sqrt(atom1.sigma[k] * atom1.sigma[k] + atom2.sigma[k] * atom2.sigma[k]);
    }
    double total = 0;
    for (int i = 0; i < nodes_per_axis; i++) {
        double dx = mu[0] + sd[0] * rule.nodes[i];
        double partial_j = 0;
        for (int j = 0; j < nodes_per_axis; j++) {
            double dy = mu[1] + sd[1] * rule.nodes[j];
            double partial_k = 0;
            for (int k = 0; k < nodes_per_axis; k++) {
                double dz = mu[2] + sd[2] * rule.nodes[k];
                double r2 = dx * dx + dy * dy + dz * dz;
                partial_k += rule.weights[k] * model.c6_mhz_um6 / (r2 * r2 * r2);
            }
            partial_j += rule.weights[j] * partial_k;
        }
        total += rule.weights[i] * partial_j;
    }
    AverageBlockade out;
    out.mean_mhz = total;
    out.samples = static_cast<long>(nodes_per_axis) * nodes_per_axis * nodes_per_axis;
    return out;
}

}  // namespace rydsim
