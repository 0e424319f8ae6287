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

#include "rydsim/laser/laser_noise.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rydsim/util/least_squares.h"
#include "rydsim/util/quadrature.h"
#include "rydsim/util/units.h"

namespace rydsim {

namespace {

double gaussian_pair(const ServoBump &b, double f) {
    double s2 = 2 * b.width * b.width;
    double lo = f - b.center;
    double hi = f + b.center;
    return std::exp(-lo * lo / s2) + std::exp(-hi * hi / s2);
}

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        return 1.0 - x * x / 6.0;
    }
    return std::sin(x) / x;
}

double white_continuum(double h0, double delay, double f) {
    if (h0 == 0) {
        return 0.0;
    }
    double a = kTwoPi * h0;
    double carrier = std::exp(-2 * kPi * a * delay);
    double phase = kTwoPi * f * delay;
    double bracket = 1.0 - carrier * (std::cos(phase) + a * kTwoPi * delay * sinc(phase));
    return 2 * h0 / (f * f + a * a) * bracket;
}

double bumps_continuum(const LaserNoiseModel &m, double f) {
    double total = 0;
    double s = std::sin(kPi * f * m.delay);
    for (const auto &b : m.bumps) {
        total += 4 * b.height / (b.center * b.center) * s * s * gaussian_pair(b, f);
    }
    return total;
}

// Integral over all f of one bump's continuum term: the phase variance it
// moves out of the carrier.
double bump_power(const ServoBump &b, double delay) {
    double x = kPi * b.width * delay;
    double overlap = 1.0 - std::cos(kTwoPi * b.center * delay) * std::exp(-2 * x * x);
    return 4 * b.height / (b.center * b.center) * std::sqrt(kTwoPi) * b.width * overlap;
}

}  // namespace

void LaserNoiseModel::validate() const {
    if (!(h0 >= 0) || !std::isfinite(h0)) {
        throw std::invalid_argument("h0 must be non-negative.");
    }
    for (const auto &b : bumps) {
        if (!(b.height > 0 && b.center > 0 && b.width > 0) || !std::isfinite(b.height + b.center + b.width)) {
            throw std::invalid_argument("servo bump height, center and width must be positive.");
        }
    }
    if (!(dark_floor >= 0) || !(delay >= 0) || !(scale > 0)) {
        throw std::invalid_argument("dark floor and delay must be non-negative and scale positive.");
    }
}

LaserNoiseModel LaserNoiseModel::white_only() const {
    LaserNoiseModel out = *this;
    out.bumps.clear();
    return out;
}

double fiber_delay(double length_m, double group_index) { return length_m * group_index / kSpeedOfLight; }

double psd_frequency(const LaserNoiseModel &model, double f) {
    double total = model.h0;
    for (const auto &b : model.bumps) {
        total += b.height * gaussian_pair(b, f);
    }
    return total;
}

double psd_phase(const LaserNoiseModel &model, double f) {
    if (f == 0) {
        throw std::invalid_argument("phase PSD is undefined at f = 0.");
    }
    return psd_frequency(model, f) / (f * f);
}

double heterodyne_carrier_weight(const LaserNoiseModel &model) {
    double exponent = 4 * kPi * kPi * model.h0 * model.delay;
    for (const auto &b : model.bumps) {
        exponent += bump_power(b, model.delay);
    }
    return std::exp(-exponent);
}

double heterodyne_continuum(const LaserNoiseModel &model, double f) {
    return white_continuum(model.h0, model.delay, f) + bumps_continuum(model, f);
}

double heterodyne_spectrum(const LaserNoiseModel &model, double f) {
    return model.scale * heterodyne_continuum(model, f) + model.dark_floor;
}

double heterodyne_normalization(const LaserNoiseModel &model) {
    if (!(model.delay > 0)) {
        throw std::invalid_argument("heterodyne normalization needs a positive delay.");
    }
    double period = 1.0 / model.delay;
    double top = 2000 * period;
    for (const auto &b : model.bumps) {
        top = std::max(top, b.center + 12 * b.width);
    }
    std::vector<double> breaks;
    for (double f = period; f < top; f += period) {
        breaks.push_back(f);
    }
    for (const auto &b : model.bumps) {
        for (double k = -6; k <= 6; k++) {
            breaks.push_back(b.center + k * b.width);
        }
    }
    std::sort(breaks.begin(), breaks.end());
    auto f = [&](double x) { return heterodyne_continuum(model, x); };
    QuadratureResult q = integrate_gk15(f, 0.0, top, breaks, 1e-12, 1e-9, 200000);
    // Beyond `top` the white continuum averages to 2 h0 / f^2.
    double tail = 2 * model.h0 / top;
    return heterodyne_carrier_weight(model) + 2 * (q.value + tail);
}

double HeterodyneFit::standard_error(size_t k) const {
    if (k >= static_cast<size_t>(covariance.rows())) {
        throw std::out_of_range("parameter index out of range");
    }
    return std::sqrt(std::max(0.0, covariance(k, k)));
}

HeterodyneFit fit_heterodyne(
    const std::vector<double> &freqs, const std::vector<double> &psd, const LaserNoiseModel &initial,
    const HeterodyneFitOptions &options) {
    initial.validate();
    if (freqs.size() != psd.size()) {
        throw std::invalid_argument("frequency and PSD columns differ in length.");
    }
    std::vector<double> fs;
    std::vector<double> ys;
    for (size_t i = 0; i < freqs.size(); i++) {
        if (freqs[i] > 0 && psd[i] > 0 && std::isfinite(freqs[i]) && std::isfinite(psd[i])) {
            fs.push_back(freqs[i]);
            ys.push_back(psd[i]);
        }
    }

    // Parameter layout. `is_log` marks parameters fitted as logarithms.
    HeterodyneFit fit;
    std::vector<bool> is_log;
    std::vector<double> start;
    auto add = [&](const std::string &name, double value, bool log_space) {
        fit.parameter_names.push_back(name);
        is_log.push_back(log_space);
        start.push_back(log_space ? std::log(value) : value);
    };
    double tiny = std::numeric_limits<double>::min();
    add("h0", std::max(initial.h0, 1e-6), true);
    if (options.fit_dark_floor) {
        add("dark_floor", std::max(initial.dark_floor, tiny * 1e10), true);
    }
    if (options.fit_scale) {
        add("scale", initial.scale, true);
    }
    for (size_t j = 0; j < initial.bumps.size(); j++) {
        std::string tag = "bump" + std::to_string(j) + ".";
        add(tag + "height", initial.bumps[j].height, true);
        if (options.fit_bump_centers) {
            add(tag + "center", initial.bumps[j].center, true);
        }
        add(tag + "width", initial.bumps[j].width, true);
    }
    size_t n_params = start.size();
    if (fs.size() < 10 * n_params) {
        throw std::invalid_argument(
            "heterodyne fit needs at least " + std::to_string(10 * n_params) + " positive samples, got " +
            std::to_string(fs.size()));
    }

    auto unpack = [&](const Eigen::VectorXd &p) {
        LaserNoiseModel m = initial;
        size_t k = 0;
        auto next = [&]() {
            double v = p[k];
            return is_log[k++] ? std::exp(v) : v;
        };
        m.h0 = next();
        if (options.fit_dark_floor) {
            m.dark_floor = next();
        }
        if (options.fit_scale) {
            m.scale = next();
        }
        for (auto &b : m.bumps) {
            b.height = next();
            if (options.fit_bump_centers) {
                b.center = next();
            }
            b.width = next();
        }
        return m;
    };

    ResidualFunction residuals = [&](const Eigen::VectorXd &p, Eigen::VectorXd &r) {
        LaserNoiseModel m = unpack(p);
        for (size_t i = 0; i < fs.size(); i++) {
            r[i] = (heterodyne_spectrum(m, fs[i]) - ys[i]) / ys[i];
        }
    };
    Eigen::VectorXd p0 = Eigen::Map<Eigen::VectorXd>(start.data(), start.size());
    LeastSquaresOptions lso;
    lso.tolerance = 1e-14;
    lso.scale = Eigen::VectorXd::Ones(n_params);
    LeastSquaresResult r = solve_least_squares(residuals, static_cast<int>(fs.size()), p0, lso);

    fit.model = unpack(r.params);
    fit.converged = r.converged;
    fit.chi_square = r.chi_square;
    Eigen::VectorXd jac(n_params);
    for (size_t k = 0; k < n_params; k++) {
        double v = is_log[k] ? std::exp(r.params[k]) : r.params[k];
        fit.parameters.push_back(v);
        jac[k] = is_log[k] ? v : 1.0;
        // A log parameter that ran 30 e-folds below its start has hit the
        // positivity bound.
        if (is_log[k] && r.params[k] < start[k] - 30) {
            fit.at_bound.push_back(fit.parameter_names[k]);
        }
    }
    fit.covariance = jac.asDiagonal() * r.covariance * jac.asDiagonal();
    Eigen::VectorXd res(fs.size());
    residuals(r.params, res);
    fit.residuals.assign(res.data(), res.data() + res.size());

    fit.dark_limited = true;
    for (double f : fs) {
        if (fit.model.scale * white_continuum(fit.model.h0, fit.model.delay, f) >= fit.model.dark_floor) {
            fit.dark_limited = false;
            break;
        }
    }
    // Both h0 -> 0 and h0 -> infinity push the white continuum under the
    // floor, so the fitted value carries no information. Report the narrow
    // branch: h0 consistent with zero.
    if (fit.dark_limited) {
        fit.model.h0 = 0.0;
        fit.parameters[0] = 0.0;
    }
    return fit;
}

double rabi_error(const LaserNoiseModel &model, double omega0, int half_turns, const RabiErrorOptions &options) {
    if (!(omega0 > 0) || !std::isfinite(omega0)) {
        throw std::invalid_argument("Rabi frequency must be positive.");
    }
    if (half_turns < 1) {
        throw std::invalid_argument("rotation must be at least one half-turn.");
    }
    double n = half_turns;
    double f_unit = omega0 / kTwoPi;
    // In u = 2 pi f / Omega0 the integrand is
    //   S(u f_unit) 2 sin^2(pi N (u - 1) / 2) / ((u - 1)^2 (u + 1)^2),
    // which is smooth through the resonance at u = 1.
    auto integrand = [&](double u) {
        double x = u - 1.0;
        double shape;
        if (std::abs(x) < 1e-6) {
            double a = kPi * n / 2;
            shape = 2 * a * a / ((u + 1) * (u + 1));
        } else {
            double s = std::sin(kPi * n * x / 2);
            shape = 2 * s * s / (x * x * (u + 1) * (u + 1));
        }
        return psd_frequency(model, u * f_unit) * shape;
    };
    double top = options.cutoff;
    std::vector<double> breaks;
    double spacing = 1.0 / n;
    for (double u = spacing; u < std::min(top, 10.0); u += spacing) {
        breaks.push_back(u);
    }
    for (double u = 10.0; u < top; u += 1.0) {
        breaks.push_back(u);
    }
    for (const auto &b : model.bumps) {
        for (double k = -6; k <= 6; k++) {
            double u = (b.center + k * b.width) / f_unit;
            breaks.push_back(u);
        }
        top = std::max(top, (b.center + 10 * b.width) / f_unit);
    }
    std::sort(breaks.begin(), breaks.end());
    QuadratureResult q = integrate_gk15(integrand, 0.0, top, breaks, 0.0, options.rel_tol, 100000);
    if (!q.converged && q.abs_error > 1e-4 * std::abs(q.value)) {
        throw std::runtime_error("Rabi error integral did not converge.");
    }
    // White tail: sin^2 averages to 1/2 and (u-1)^2 (u+1)^2 ~ u^4 - 2u^2.
    double tail = model.h0 * (1.0 / (3 * top * top * top) + 2.0 / (5 * std::pow(top, 5)));
    return kTwoPi / omega0 * (q.value + tail);
}

std::vector<RabiErrorPoint> error_vs_rabi_curve(
    const LaserNoiseModel &model, const std::vector<double> &omegas, int half_turns,
    const RabiErrorOptions &options) {
    LaserNoiseModel white = model.white_only();
    std::vector<RabiErrorPoint> out;
    for (double w : omegas) {
        RabiErrorPoint p;
        p.omega0 = w;
        p.error = rabi_error(model, w, half_turns, options);
        p.white_only_error = model.bumps.empty() ? p.error : rabi_error(white, w, half_turns, options);
        out.push_back(p);
    }
    return out;
}

double two_photon_rabi_error(
    const LaserNoiseModel &first, const LaserNoiseModel &second, double omega0, int half_turns,
    const RabiErrorOptions &options) {
    return rabi_error(first, omega0, half_turns, options) + rabi_error(second, omega0, half_turns, options);
}

Trace parse_trace(const std::string &text) {
    Trace trace;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        number++;
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double f;
        double v;
        if (!(row >> f)) {
            std::string rest;
            row.clear();
            if (row >> rest) {
                throw std::invalid_argument("line " + std::to_string(number) + ": expected two numeric columns");
            }
            continue;
        }
        std::string extra;
        if (!(row >> v) || (row >> extra) || !std::isfinite(f) || !std::isfinite(v)) {
            throw std::invalid_argument("line " + std::to_string(number) + ": expected two numeric columns");
        }
        trace.freqs.push_back(f);
        trace.values.push_back(v);
    }
    if (trace.freqs.empty()) {
        throw std::invalid_argument("trace has no samples");
    }
    return trace;
}

Trace load_trace(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open trace file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_trace(buffer.str());
}

}  // namespace rydsim
