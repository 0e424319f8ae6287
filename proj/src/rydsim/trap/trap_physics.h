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

#ifndef RYDSIM_TRAP_TRAP_PHYSICS_H
#define RYDSIM_TRAP_TRAP_PHYSICS_H

#include <array>
#include <cstdint>

namespace rydsim {

/// Optical tweezer seen by one atom. Units follow the lab convention used in
/// configs: um, nm, mK (depth / k_B), uK, mW.
struct TrapSpec {
    double waist_um = 0.0;
    double wavelength_nm = 0.0;
    double depth_mk = 0.0;
    double temperature_uk = 0.0;
    double power_mw = 0.0;

    void validate() const;
};

/// Temperature after an adiabatic change of trap depth: T_i * sqrt(U_f / U_i).
double adiabatic_temperature(double t_initial_uk, double u_initial, double u_final);

struct LocalizationSigmas {
    double radial_um = 0.0;
    double axial_um = 0.0;
    // Set when T >= U, where the harmonic approximation behind the formulas
    // no longer holds.
    bool outside_harmonic_regime = false;
};

/// Thermal RMS position spreads in a Gaussian tweezer:
///   sigma_rho = (w/2) sqrt(kT/U),  sigma_z = (pi w^2 / (sqrt(2) lambda)) sqrt(kT/U).
LocalizationSigmas localization_sigmas(const TrapSpec &trap);

/// Peak depth (mK) of a Gaussian tweezer with the given power, waist and
/// scalar polarizability (atomic units): U = alpha I0 / (2 eps0 c),
/// I0 = 2P / (pi w^2).
double trap_depth_mk(double power_mw, double waist_um, double polarizability_au);

/// Point-dipole van der Waals blockade B(r) = C6 / r^6 pinned to a reference
/// measurement B(r0) = B0.
struct BlockadeModel {
    double c6_mhz_um6 = 0.0;
    double reference_blockade_mhz = 0.0;
    double reference_separation_um = 0.0;

    static BlockadeModel calibrated(double blockade_mhz, double separation_um);
};

double blockade_point(const BlockadeModel &model, double r_um);

/// Anisotropic Gaussian position distribution: mean and per-axis sigma (um).
struct PositionDistribution {
    std::array<double, 3> mean{};
    std::array<double, 3> sigma{};
};

struct AverageBlockade {
    double mean_mhz = 0.0;
    double standard_error_mhz = 0.0;
    long samples = 0;
    bool converged = true;
};

/// Monte Carlo estimate of <B> = int int rho1 rho2 B(|r2 - r1|). Stops early
/// once the standard error falls below `target_standard_error` (relative to
/// the mean); `converged` is false if max_samples is reached first.
AverageBlockade average_blockade(
    const PositionDistribution &atom1, const PositionDistribution &atom2, const BlockadeModel &model,
    long max_samples, uint64_t seed, double target_relative_error = 0.0);

/// Deterministic estimate of the same integral. The difference r2 - r1 is a
/// Gaussian with summed variances, so the six-dimensional integral reduces to
/// three nested Gauss-Hermite sums over the relative coordinate.
AverageBlockade average_blockade_quadrature(
    const PositionDistribution &atom1, const PositionDistribution &atom2, const BlockadeModel &model,
    int nodes_per_axis = 64);

}  // namespace rydsim

#endif
