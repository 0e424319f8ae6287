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

#include "rydsim/util/least_squares.h"

#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/NonLinearOptimization>

namespace rydsim {

namespace {

struct Functor {
    const ResidualFunction &residuals;
    int num_residuals;
    Eigen::VectorXd scale;
    int calls = 0;

    int values() const { return num_residuals; }
    int inputs() const { return static_cast<int>(scale.size()); }

    int operator()(const Eigen::VectorXd &x, Eigen::VectorXd &fvec) {
        calls++;
        residuals(x, fvec);
        return fvec.allFinite() ? 0 : -1;
    }

    int df(const Eigen::VectorXd &x, Eigen::MatrixXd &fjac) {
        const Eigen::Index n = x.size();
        Eigen::VectorXd xp = x;
        Eigen::VectorXd fp(num_residuals), fm(num_residuals);
        for (Eigen::Index k = 0; k < n; k++) {
            double h = 1e-6 * std::max(std::abs(x[k]), scale[k]);
            xp[k] = x[k] + h;
            residuals(xp, fp);
            xp[k] = x[k] - h;
            residuals(xp, fm);
            xp[k] = x[k];
            fjac.col(k) = (fp - fm) / (2.0 * h);
        }
        calls += 2 * static_cast<int>(n);
        return fjac.allFinite() ? 0 : -1;
    }
};

const char *status_name(Eigen::LevenbergMarquardtSpace::Status status) {
    using namespace Eigen::LevenbergMarquardtSpace;
    switch (status) {
        case ImproperInputParameters:
            return "improper input parameters";
        case RelativeReductionTooSmall:
            return "relative reduction too small";
        case RelativeErrorTooSmall:
            return "relative error too small";
        case RelativeErrorAndReductionTooSmall:
            return "relative error and reduction too small";
        case CosinusTooSmall:
            return "gradient orthogonal to residuals";
        case TooManyFunctionEvaluation:
            return "too many function evaluations";
        case FtolTooSmall:
            return "ftol too small";
        case XtolTooSmall:
            return "xtol too small";
        case GtolTooSmall:
            return "gtol too small";
        case UserAsked:
            return "non-finite residuals";
        default:
            return "unknown";
    }
}

}  // namespace

double LeastSquaresResult::standard_error(int k) const {
    double v = covariance(k, k);
    return v > 0.0 ? std::sqrt(v) : 0.0;
}

LeastSquaresResult solve_least_squares(
    const ResidualFunction &residuals, int num_residuals, const Eigen::VectorXd &start,
    const LeastSquaresOptions &options) {
    const int n = static_cast<int>(start.size());
    if (num_residuals < n) {
        throw std::invalid_argument("solve_least_squares: fewer residuals than parameters");
    }
    Functor functor{residuals, num_residuals, Eigen::VectorXd::Ones(n)};
    if (options.scale.size() == n) {
        functor.scale = options.scale.cwiseAbs();
    } else {
        for (int k = 0; k < n; k++) {
            functor.scale[k] = start[k] != 0.0 ? std::abs(start[k]) : 1.0;
        }
    }

    Eigen::LevenbergMarquardt<Functor> lm(functor);
    lm.parameters.ftol = options.tolerance;
    lm.parameters.xtol = options.tolerance;
    lm.parameters.maxfev = options.max_evaluations;
    Eigen::VectorXd x = start;
    auto status = lm.minimize(x);

    LeastSquaresResult result;
    result.params = x;
    result.evaluations = functor.calls;
    result.status = status_name(status);
    using namespace Eigen::LevenbergMarquardtSpace;
    result.converged = status == RelativeReductionTooSmall || status == RelativeErrorTooSmall ||
                       status == RelativeErrorAndReductionTooSmall || status == CosinusTooSmall ||
                       status == FtolTooSmall || status == XtolTooSmall || status == GtolTooSmall;

    Eigen::VectorXd r(num_residuals);
    residuals(x, r);
    result.chi_square = r.squaredNorm();
    result.degrees_of_freedom = num_residuals - n;
    Eigen::MatrixXd jac(num_residuals, n);
    functor.df(x, jac);
    Eigen::MatrixXd normal = jac.transpose() * jac;
    Eigen::MatrixXd inverse = normal.completeOrthogonalDecomposition().pseudoInverse();
    double reduced = result.degrees_of_freedom > 0 ? result.chi_square / result.degrees_of_freedom : 0.0;
    result.covariance = inverse * reduced;
    return result;
}

}  // namespace rydsim
