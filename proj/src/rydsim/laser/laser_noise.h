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

#ifndef RYDSIM_LASER_LASER_NOISE_H
#define RYDSIM_LASER_LASER_NOISE_H

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rydsim {

/// Gaussian servo bump of the frequency-noise PSD, mirrored at -f.
struct ServoBump {
    double height = 0.0;  // Hz^2/Hz
    double center = 0.0;  // Hz
    double width = 0.0;   // Hz (Gaussian sigma)

    bool operator==(const ServoBump &) const = default;
};

/// Laser frequency noise: white floor plus servo bumps (two-sided PSD, Hz^2/Hz),
/// with the self-heterodyne measurement parameters used when fitting traces.
struct LaserNoiseModel {
    double h0 = 0.0;
    std::vector<ServoBump> bumps;
    double dark_floor = 0.0;  // 1/Hz, fit only
    double delay = 0.0;       // s, heterodyne fiber delay
    double scale = 1.0;       // trace normalization, fit only

    void validate() const;
    LaserNoiseModel white_only() const;

    bool operator==(const LaserNoiseModel &) const = default;
};

/// Delay of a fiber of the given length and group index.
double fiber_delay(double length_m, double group_index);

/// S_dnu(f) = h0 + sum_j h_j [G(f - f_j) + G(f + f_j)].
double psd_frequency(const LaserNoiseModel &model, double f);
/// S_phi(f) = S_dnu(f) / f^2, f != 0.
double psd_phase(const LaserNoiseModel &model, double f);

/// Weight of the carrier delta in the self-heterodyne spectrum,
/// exp(-4 pi^2 h0 t_d - sum_j P_j), where P_j is the integrated continuum of
/// bump j (the power it moves out of the carrier).
double heterodyne_carrier_weight(const LaserNoiseModel &model);

/// Continuous part of the self-heterodyne spectrum (white term without its
/// delta, plus bump terms), unscaled and without the dark floor.
double heterodyne_continuum(const LaserNoiseModel &model, double f);

/// Model of a measured trace: scale * (continuum) + dark floor. f must be
/// nonzero; the carrier sits at f = 0 and is reported separately.
double heterodyne_spectrum(const LaserNoiseModel &model, double f);

/// Carrier weight plus the integral of the continuum over all f. Equals one
/// for white noise and to first order in the bump heights.
double heterodyne_normalization(const LaserNoiseModel &model);

struct HeterodyneFit {
    LaserNoiseModel model;
    // Free parameters in fit order: h0, dark floor, scale, then height,
    // center, width per bump.
    std::vector<std::string> parameter_names;
    std::vector<double> parameters;
    Eigen::MatrixXd covariance;
    std::vector<double> residuals;  // relative, (model - data) / data
    double chi_square = 0.0;
    bool converged = false;
    // The white-noise continuum lies below the dark floor at every sample,
    // so the trace only bounds h0.
    bool dark_limited = false;
    // Names of parameters that ended at a positivity bound.
    std::vector<std::string> at_bound;

    double standard_error(size_t k) const;
};

struct HeterodyneFitOptions {
    bool fit_scale = true;
    bool fit_dark_floor = true;
    bool fit_bump_centers = true;
};

/// Weighted least squares of heterodyne_spectrum to a trace with relative
/// residuals. Positive parameters are fitted in log space. Points at f <= 0
/// are skipped. Throws std::invalid_argument if there are fewer than ten
/// samples per free parameter.
HeterodyneFit fit_heterodyne(
    const std::vector<double> &freqs, const std::vector<double> &psd, const LaserNoiseModel &initial,
    const HeterodyneFitOptions &options = {});

struct RabiErrorOptions {
    // Upper limit of the integral in units of Omega0 / 2 pi. The remaining
    // tail of the white floor is added analytically.
    double cutoff = 100.0;
    double rel_tol = 1e-6;
};

/// First-order error of an N pi rotation (N half-turns, integer N >= 1) at
/// Rabi frequency omega0 (rad/s) from frequency noise S_dnu:
///   eps = 4 pi^2 Omega0^2 int_0^inf S(f) [1 - (-1)^N cos(2 pi^2 N f / Omega0)] / (Omega0^2 - 4 pi^2 f^2)^2 df.
/// Throws std::runtime_error if the quadrature does not converge.
double rabi_error(const LaserNoiseModel &model, double omega0, int half_turns, const RabiErrorOptions &options = {});

struct RabiErrorPoint {
    double omega0 = 0.0;
    double error = 0.0;
    double white_only_error = 0.0;
};

std::vector<RabiErrorPoint> error_vs_rabi_curve(
    const LaserNoiseModel &model, const std::vector<double> &omegas, int half_turns,
    const RabiErrorOptions &options = {});

/// Two-photon rotation error: the two lasers' errors added linearly.
double two_photon_rabi_error(
    const LaserNoiseModel &first, const LaserNoiseModel &second, double omega0, int half_turns,
    const RabiErrorOptions &options = {});

struct Trace {
    std::vector<double> freqs;
    std::vector<double> values;
};

/// Two whitespace- or comma-separated numeric columns; '#' starts a comment.
/// Throws std::invalid_argument with the line number on malformed rows.
Trace parse_trace(const std::string &text);
Trace load_trace(const std::string &path);

}  // namespace rydsim

#endif
