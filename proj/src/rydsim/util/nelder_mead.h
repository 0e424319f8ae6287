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

#ifndef RYDSIM_UTIL_NELDER_MEAD_H
#define RYDSIM_UTIL_NELDER_MEAD_H

#include <functional>
#include <vector>

namespace rydsim {

struct NelderMeadOptions {
    int max_evaluations = 2000;
    // Stop when the spread of simplex values and the simplex diameter are both
    // below these tolerances.
    double f_tolerance = 1e-12;
    double x_tolerance = 1e-9;
    // Initial simplex edge per coordinate. A single value is broadcast.
    std::vector<double> initial_step{0.05};
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Minimizes `f` with the adaptive-coefficient Nelder-Mead simplex method
/// (Gao & Han coefficients, which behave better than the classic ones above a
/// handful of dimensions).
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double> &)> &f, std::vector<double> start,
    const NelderMeadOptions &options = {});

}  // namespace rydsim

#endif
