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

#ifndef RYDSIM_UTIL_LEAST_SQUARES_H
#define RYDSIM_UTIL_LEAST_SQUARES_H

#include <Eigen/Dense>
#include <functional>
#include <string>

namespace rydsim {

/// Weighted residual vector r(p); the solver minimizes |r|^2. Callers fold
/// their weights in as r_i = sqrt(w_i) * (model_i - data_i).
using ResidualFunction = std::function<void(const Eigen::VectorXd &params, Eigen::VectorXd &residuals)>;

struct LeastSquaresOptions {
    double tolerance = 1e-15;
    int max_evaluations = 20000;
    // Per-parameter characteristic scale used for finite-difference steps.
    Eigen::VectorXd scale;
};

struct LeastSquaresResult {
    Eigen::VectorXd params;
    // (J^T J)^-1 scaled by the reduced chi-square of the weighted residuals.
    Eigen::MatrixXd covariance;
    double chi_square = 0.0;
    int degrees_of_freedom = 0;
    int evaluations = 0;
    bool converged = false;
    std::string status;

    double standard_error(int k) const;
};

/// Levenberg-Marquardt (MINPACK port shipped with Eigen) with a central
/// difference Jacobian.
LeastSquaresResult solve_least_squares(
    const ResidualFunction &residuals, int num_residuals, const Eigen::VectorXd &start,
    const LeastSquaresOptions &options = {});

}  // namespace rydsim

#endif
