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

#ifndef RYDSIM_UTIL_QUADRATURE_H
#define RYDSIM_UTIL_QUADRATURE_H

#include <functional>
#include <span>

namespace rydsim {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature over [a, b].
///
/// The interval with the largest error estimate is bisected until the total
/// estimate drops below max(abs_tol, rel_tol * |value|) or `max_intervals`
/// is reached (then `converged` is false).
QuadratureResult integrate_gk15(
    const std::function<double(double)> &f, double a, double b, double abs_tol, double rel_tol,
    int max_intervals = 4000);

/// Same, but seeded with the given interior breakpoints so that known features
/// (peaks, removable singularities) fall on interval boundaries. Breakpoints
/// outside (a, b) are ignored.
QuadratureResult integrate_gk15(
    const std::function<double(double)> &f, double a, double b, std::span<const double> breakpoints,
    double abs_tol, double rel_tol, int max_intervals = 4000);

}  // namespace rydsim

#endif
