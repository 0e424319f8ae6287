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

#ifndef RYDSIM_BUDGET_EXCLUSION_H
#define RYDSIM_BUDGET_EXCLUSION_H

#include <string>
#include <vector>

#include "rydsim/budget/monte_carlo.h"

namespace rydsim {

/// Error attributable to one mechanism: baseline error minus the error with
/// only that mechanism switched off. Can be slightly negative within noise.
struct BudgetRow {
    Mechanism mechanism;
    std::string name;
    double contribution = 0.0;
    double standard_error = 0.0;
};

struct ExclusionTable {
    MonteCarloReport baseline;
    std::vector<BudgetRow> rows;
    double linear_sum = 0.0;
    double linear_sum_standard_error = 0.0;
    double quadrature_sum = 0.0;
    double quadrature_sum_standard_error = 0.0;
};

/// Runs the baseline and one exclusion per mechanism with the same seed, so
/// every run shares its random draws and each row is a paired difference.
ExclusionTable exclusion_table(
    const SystemParams &params, const GateParams &gate, long shots, uint64_t seed,
    const MonteCarloOptions &options = {});

/// Builds the table from finished runs; `excluded[k]` must correspond to
/// exclusion_mechanisms()[k]. Shots that failed in either run are skipped.
ExclusionTable assemble_exclusion_table(MonteCarloReport baseline, const std::vector<MonteCarloReport> &excluded);

std::string format_exclusion_text(const ExclusionTable &table);
std::string format_exclusion_csv(const ExclusionTable &table);

}  // namespace rydsim

#endif
