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

#include "rydsim/analysis/fidelity.h"

#include <algorithm>
#include <complex>
#include <set>

#include "rydsim/util/least_squares.h"
#include "rydsim/util/units.h"

namespace rydsim {

namespace {

void require_probability(double p, const char *name) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1].");
    }
}

std::vector<double> errors_of(const LeastSquaresResult &r) {
    std::vector<double> out;
    for (int k = 0; k < r.params.size(); k++) {
        out.push_back(r.standard_error(k));
    }
    return out;
}

}  // namespace

RbFit fit_geometric_decay(const std::vector<int> &depths, const std::vector<double> &probs, const std::vector<double> &weights) {
    if (depths.size() != probs.size() || (!weights.empty() && weights.size() != probs.size())) {
        throw std::invalid_argument("depth, probability and weight columns differ in length.");
    }
    std::set<int> distinct(depths.begin(), depths.end());
    if (distinct.size() < 3) {
        throw FitError("geometric decay fit needs at least three distinct depths.");
    }
    if (std::all_of(probs.begin(), probs.end(), [&](double p) { return p == probs.front(); })) {
        throw FitError("geometric decay fit is degenerate for constant data.");
    }
    for (double w : weights) {
        if (!(w >= 0) || !std::isfinite(w)) {
            throw std::invalid_argument("weights must be finite and non-negative.");
        }
    }

    // Log-linear regression for the starting point.
    double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
    for (size_t i = 0; i < depths.size(); i++) {
        if (probs[i] > 0) {
            double x = depths[i];
            double y = std::log(probs[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            n++;
        }
    }
    double slope = n >= 2 && (n * sxx - sx * sx) != 0 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;
    double intercept = n > 0 ? (sy - slope * sx) / n : 0.0;
    Eigen::VectorXd start(2);
    start << std::exp(intercept), std::exp(std::min(slope, 0.0));

    ResidualFunction residuals = [&](const Eigen::VectorXd &p, Eigen::VectorXd &r) {
        for (size_t i = 0; i < depths.size(); i++) {
            double w = weights.empty() ? 1.0 : weights[i];
            r[i] = std::sqrt(w) * (p[0] * std::pow(p[1], depths[i]) - probs[i]);
        }
    };
    LeastSquaresOptions options;
    options.scale = Eigen::VectorXd::Constant(2, 0.1);
    options.tolerance = 1e-14;
    LeastSquaresResult r = solve_least_squares(residuals, static_cast<int>(depths.size()), start, options);
    if (!r.converged) {
        throw FitError("geometric decay fit did not converge: " + r.status);
    }
    RbFit fit;
    fit.amplitude = r.params[0];
    fit.per_gate = r.params[1];
    fit.covariance = r.covariance;
    fit.chi_square = r.chi_square;
    return fit;
}

CzFidelity cz_fidelity(double p_ret, double p_bb_given_ret, double p_leak, double tolerance) {
    require_probability(p_ret, "P_ret");
    require_probability(p_bb_given_ret, "P_bb|ret");
    require_probability(p_leak, "P_leak");
    if (p_leak >= 1) {
        throw std::invalid_argument("P_leak must be below 1.");
    }
    double sigma = (1 - p_leak - p_bb_given_ret) / (1 - p_leak);
    if (sigma < -tolerance) {
        throw std::invalid_argument("inconsistent inputs: P_bb|ret exceeds 1 - P_leak.");
    }
    sigma = std::max(sigma, 0.0);
    CzFidelity out;
    out.depolarizing = sigma;
    out.fidelity = p_ret * (1 - p_leak) * (1 - 0.75 * sigma);
    return out;
}

BetaPosterior beta_posterior(const QndCounts &counts) {
    if (counts.correct < 0 || counts.incorrect < 0) {
        throw std::invalid_argument("counts must be non-negative.");
    }
    BetaPosterior out;
    out.label = counts.label;
    out.trials = counts.correct + counts.incorrect;
    double n = static_cast<double>(out.trials);
    out.mean = (counts.correct + 1.0) / (n + 2.0);
    out.std = std::sqrt(out.mean * (1 - out.mean) / (n + 3.0));
    return out;
}

QndFidelity dirichlet_qnd(const std::vector<QndCounts> &counts) {
    if (counts.empty()) {
        throw std::invalid_argument("at least one input state is required.");
    }
    QndFidelity out;
    double var = 0;
    for (const auto &c : counts) {
        BetaPosterior b = beta_posterior(c);
        out.mean += b.mean;
        var += b.std * b.std;
        out.states.push_back(b);
    }
    double m = static_cast<double>(counts.size());
    out.mean /= m;
    out.std = std::sqrt(var) / m;
    return out;
}

double DecayFit::value(const std::string &name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        throw std::out_of_range("no fit parameter '" + name + "'");
    }
    return values[it - names.begin()];
}

double DecayFit::error(const std::string &name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        throw std::out_of_range("no fit parameter '" + name + "'");
    }
    return errors[it - names.begin()];
}

namespace {

double decay_model_value(DecayModel model, const Eigen::VectorXd &p, double t) {
    if (model == DecayModel::kExponential) {
        return p[0] * std::exp(-p[1] * t);
    }
    double env = t / p[2];
    return p[4] + p[0] * std::exp(-env * env) * std::cos(kTwoPi * p[1] * t + p[3]);
}

}  // namespace

double evaluate_decay_model(const DecayFit &fit, double t) {
    Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(fit.values.data(), fit.values.size());
    return decay_model_value(fit.model, p, t);
}

DecayFit fit_decay_oscillation(const std::vector<double> &times, const std::vector<double> &values, DecayModel model) {
    if (times.size() != values.size()) {
        throw std::invalid_argument("time and value columns differ in length.");
    }
    size_t n = times.size();
    if (n < 5) {
        throw FitError("decay fit needs at least five points.");
    }
    auto [tmin_it, tmax_it] = std::minmax_element(times.begin(), times.end());
    double span = *tmax_it - *tmin_it;
    if (!(span > 0)) {
        throw FitError("decay fit needs distinct times.");
    }

    DecayFit fit;
    fit.model = model;
    Eigen::VectorXd start;
    Eigen::VectorXd scale;
    if (model == DecayModel::kExponential) {
        fit.names = {"amplitude", "rate"};
        double sx = 0, sy = 0, sxx = 0, sxy = 0, m = 0;
        for (size_t i = 0; i < n; i++) {
            if (values[i] > 0) {
                double y = std::log(values[i]);
                sx += times[i];
                sy += y;
                sxx += times[i] * times[i];
                sxy += times[i] * y;
                m++;
            }
        }
        double det = m * sxx - sx * sx;
        double slope = m >= 2 && det > 0 ? (m * sxy - sx * sy) / det : 0.0;
        double intercept = m > 0 ? (sy - slope * sx) / m : values.front();
        start.resize(2);
        start << (m > 0 ? std::exp(intercept) : values.front()), -slope;
        scale.resize(2);
        scale << std::max(std::abs(start[0]), 1e-3), 1.0 / span;
    } else {
        fit.names = {"amplitude", "frequency", "envelope", "phase", "offset"};
        double mean = 0;
        for (double v : values) {
            mean += v;
        }
        mean /= static_cast<double>(n);
        auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        // Periodogram seed for the frequency, oversampled 20x up to the
        // mean-spacing Nyquist limit.
        double f_step = 1.0 / (20 * span);
        double f_max = 0.5 * static_cast<double>(n - 1) / span;
        double best_f = f_step;
        double best_power = -1;
        std::complex<double> best_c;
        for (double f = f_step; f <= f_max; f += f_step) {
            std::complex<double> c = 0;
            for (size_t i = 0; i < n; i++) {
                c += (values[i] - mean) * std::polar(1.0, -kTwoPi * f * times[i]);
            }
            if (std::norm(c) > best_power) {
                best_power = std::norm(c);
                best_f = f;
                best_c = c;
            }
        }
        start.resize(5);
        start << 0.5 * (*hi - *lo), best_f, span, std::arg(best_c), mean;
        scale.resize(5);
        scale << std::max(start[0], 1e-6), best_f * 1e-3, span, 0.1, std::max(start[0], 1e-6);
    }

    ResidualFunction residuals = [&](const Eigen::VectorXd &p, Eigen::VectorXd &r) {
        for (size_t i = 0; i < n; i++) {
            r[i] = decay_model_value(model, p, times[i]) - values[i];
        }
    };
    LeastSquaresOptions options;
    options.scale = scale;
    LeastSquaresResult r = solve_least_squares(residuals, static_cast<int>(n), start, options);
    if (!r.converged) {
        throw FitError("decay fit did not converge: " + r.status);
    }
    fit.values.assign(r.params.data(), r.params.data() + r.params.size());
    fit.errors = errors_of(r);
    fit.chi_square = r.chi_square;
    if (model == DecayModel::kGaussianSinusoid) {
        // Canonical signs: positive amplitude and envelope, phase in (-pi, pi].
        if (fit.values[0] < 0) {
            fit.values[0] = -fit.values[0];
            fit.values[3] += kPi;
        }
        fit.values[2] = std::abs(fit.values[2]);
        fit.values[3] = std::remainder(fit.values[3], kTwoPi);
    }
    return fit;
}

}  // namespace rydsim
