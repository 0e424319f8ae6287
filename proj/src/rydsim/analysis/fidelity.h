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

#ifndef RYDSIM_ANALYSIS_FIDELITY_H
#define RYDSIM_ANALYSIS_FIDELITY_H

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rydsim {

/// Raised when a fit cannot be attempted or does not converge.
class FitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// P_measure(n) = A P^n with the asymptote fixed at zero.
struct RbFit {
    double amplitude = 0.0;
    double per_gate = 0.0;
    Eigen::Matrix2d covariance = Eigen::Matrix2d::Zero();
    double chi_square = 0.0;

    double amplitude_error() const { return std::sqrt(covariance(0, 0)); }
    double per_gate_error() const { return std::sqrt(covariance(1, 1)); }
};

/// Weighted least squares for (A, P). Residuals are sqrt(w_i) (A P^n_i - p_i);
/// an empty weight vector means unit weights. Throws FitError with fewer than
/// three distinct depths, constant data, or non-convergence.
RbFit fit_geometric_decay(
    const std::vector<int> &depths, const std::vector<double> &probs, const std::vector<double> &weights = {});

struct CzFidelity {
    double depolarizing = 0.0;  // sigma
    double fidelity = 0.0;
};

/// sigma = (1 - P_leak - P_bb|ret) / (1 - P_leak),
/// F = P_ret (1 - P_leak) (1 - 3 sigma / 4).
/// sigma slightly below zero (within `tolerance`) is clamped to zero; beyond
/// that the inputs are inconsistent and std::invalid_argument is thrown.
CzFidelity cz_fidelity(double p_ret, double p_bb_given_ret, double p_leak, double tolerance = 1e-9);

/// Default leakage estimate used when none is supplied.
inline constexpr double kDefaultLeakage = 0.002;

struct QndCounts {
    std::string label;
    long correct = 0;
    long incorrect = 0;
};

struct BetaPosterior {
    std::string label;
    double mean = 0.0;
    double std = 0.0;
    long trials = 0;
};

struct QndFidelity {
    std::vector<BetaPosterior> states;
    // Unweighted mean of the per-state means; its std combines the per-state
    // posterior variances as independent.
    double mean = 0.0;
    double std = 0.0;
};

/// Marginal of the Dirichlet posterior under a uniform prior:
/// Beta(k + 1, n - k + 1), mean (k + 1) / (n + 2).
BetaPosterior beta_posterior(const QndCounts &counts);
QndFidelity dirichlet_qnd(const std::vector<QndCounts> &counts);

enum class DecayModel {
    // A exp(-r t)
    kExponential,
    // c + A exp(-(t / tau)^2) cos(2 pi f t + phi)
    kGaussianSinusoid,
};

struct DecayFit {
    DecayModel model = DecayModel::kExponential;
    std::vector<std::string> names;
    std::vector<double> values;
    std::vector<double> errors;
    double chi_square = 0.0;

    double value(const std::string &name) const;
    double error(const std::string &name) const;
};

double evaluate_decay_model(const DecayFit &fit, double t);

/// Unweighted least squares. The sinusoid frequency is seeded from the
/// periodogram peak. Throws FitError with fewer than five points or on
/// non-convergence.
DecayFit fit_decay_oscillation(const std::vector<double> &times, const std::vector<double> &values, DecayModel model);

}  // namespace rydsim

#endif
