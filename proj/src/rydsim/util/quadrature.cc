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

#include "rydsim/util/quadrature.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace rydsim {

namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment &other) const { return error < other.error; }
};

Segment gk15(const std::function<double(double)> &f, double a, double b) {
    double center = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; j++) {
        double dx = half * kXgk[j];
        double sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * sum;
        }
    }
    return Segment{a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_gk15(
    const std::function<double(double)> &f, double a, double b, double abs_tol, double rel_tol,
    int max_intervals) {
    return integrate_gk15(f, a, b, {}, abs_tol, rel_tol, max_intervals);
}

QuadratureResult integrate_gk15(
    const std::function<double(double)> &f, double a, double b, std::span<const double> breakpoints,
    double abs_tol, double rel_tol, int max_intervals) {
    QuadratureResult result;
    if (a == b) {
        result.converged = true;
        return result;
    }
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }

    std::vector<double> edges{a};
    for (double x : breakpoints) {
        if (x > a && x < b) {
            edges.push_back(x);
        }
    }
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Segment> heap;
    double total = 0.0;
    double total_error = 0.0;
    for (size_t k = 0; k + 1 < edges.size(); k++) {
        Segment s = gk15(f, edges[k], edges[k + 1]);
        total += s.value;
        total_error += s.error;
        heap.push(s);
        result.evaluations += 15;
    }

    while (true) {
        double tolerance = std::max(abs_tol, rel_tol * std::abs(total));
        if (total_error <= tolerance) {
            result.converged = true;
            break;
        }
        if (static_cast<int>(heap.size()) >= max_intervals) {
            break;
        }
        Segment worst = heap.top();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval can no longer be split in double precision.
            break;
        }
        heap.pop();
        Segment left = gk15(f, worst.a, mid);
        Segment right = gk15(f, mid, worst.b);
        result.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum to shed the drift accumulated by incremental updates.
    double resummed = 0.0;
    double resummed_error = 0.0;
    while (!heap.empty()) {
        resummed += heap.top().value;
        resummed_error += heap.top().error;
        heap.pop();
    }
    result.value = sign * resummed;
    result.abs_error = resummed_error;
    if (!result.converged) {
        result.converged = resummed_error <= std::max(abs_tol, rel_tol * std::abs(resummed));
    }
    return result;
}

}  // namespace rydsim
