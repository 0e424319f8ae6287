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

#include "rydsim/util/nelder_mead.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rydsim {

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double> &)> &f, std::vector<double> start,
    const NelderMeadOptions &options) {
    const size_t n = start.size();
    if (n == 0) {
        throw std::invalid_argument("nelder_mead: empty start vector");
    }
    if (options.initial_step.empty()) {
        throw std::invalid_argument("nelder_mead: empty initial step");
    }
    const double dim = static_cast<double>(n);
    const double alpha = 1.0;
    const double beta = 1.0 + 2.0 / dim;
    const double gamma = 0.75 - 1.0 / (2.0 * dim);
    const double delta = 1.0 - 1.0 / dim;

    NelderMeadResult result;
    auto eval = [&](const std::vector<double> &x) {
        result.evaluations++;
        double v = f(x);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };

    std::vector<std::vector<double>> simplex(n + 1, start);
    for (size_t i = 0; i < n; i++) {
        double step = options.initial_step.size() == 1 ? options.initial_step[0] : options.initial_step.at(i);
        simplex[i + 1][i] += step;
    }
    std::vector<double> values(n + 1);
    for (size_t i = 0; i <= n; i++) {
        values[i] = eval(simplex[i]);
    }

    std::vector<size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    while (result.evaluations < options.max_evaluations) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return values[a] < values[b]; });
        size_t best = order.front();
        size_t worst = order.back();
        size_t second_worst = order[n - 1];

        double diameter = 0.0;
        for (size_t i = 0; i <= n; i++) {
            for (size_t k = 0; k < n; k++) {
                diameter = std::max(diameter, std::abs(simplex[i][k] - simplex[best][k]));
            }
        }
        if (values[worst] - values[best] <= options.f_tolerance && diameter <= options.x_tolerance) {
            result.converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (size_t i = 0; i <= n; i++) {
            if (i == worst) {
                continue;
            }
            for (size_t k = 0; k < n; k++) {
                centroid[k] += simplex[i][k] / dim;
            }
        }

        for (size_t k = 0; k < n; k++) {
            trial[k] = centroid[k] + alpha * (centroid[k] - simplex[worst][k]);
        }
        double f_reflect = eval(trial);
        if (f_reflect < values[best]) {
            for (size_t k = 0; k < n; k++) {
                trial2[k] = centroid[k] + beta * (trial[k] - centroid[k]);
            }
            double f_expand = eval(trial2);
            if (f_expand < f_reflect) {
                simplex[worst] = trial2;
                values[worst] = f_expand;
            } else {
                simplex[worst] = trial;
                values[worst] = f_reflect;
            }
            continue;
        }
        if (f_reflect < values[second_worst]) {
            simplex[worst] = trial;
            values[worst] = f_reflect;
            continue;
        }
        bool outside = f_reflect < values[worst];
        for (size_t k = 0; k < n; k++) {
            trial2[k] = outside ? centroid[k] + gamma * (trial[k] - centroid[k])
                                : centroid[k] - gamma * (centroid[k] - simplex[worst][k]);
        }
        double f_contract = eval(trial2);
        if (f_contract < std::min(f_reflect, values[worst])) {
            simplex[worst] = trial2;
            values[worst] = f_contract;
            continue;
        }
        // Shrink towards the best vertex.
        for (size_t i = 0; i <= n; i++) {
            if (i == best) {
                continue;
            }
            for (size_t k = 0; k < n; k++) {
                simplex[i][k] = simplex[best][k] + delta * (simplex[i][k] - simplex[best][k]);
            }
            values[i] = eval(simplex[i]);
        }
    }

    size_t best = static_cast<size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    result.x = simplex[best];
    result.value = values[best];
    return result;
}

}  // namespace rydsim
