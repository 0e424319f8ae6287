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

#include "rydsim/budget/exclusion.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "rydsim/testing/current_gate.h"

namespace rydsim {

namespace {

MonteCarloReport report(std::vector<double> shots) {
    MonteCarloReport r;
    r.shots = static_cast<long>(shots.size());
    double sum = 0;
    for (double e : shots) {
        sum += e;
    }
    r.mean_error = sum / shots.size();
    r.shot_errors = std::move(shots);
    return r;
}

int count_lines(const std::string &s) {
    int n = 0;
    for (char c : s) {
        n += c == '\n';
    }
    return n;
}

}  // namespace

TEST(exclusion, synthetic_paired_differences) {
    MonteCarloReport base = report({0.010, 0.012, 0.014, 0.016});
    std::vector<MonteCarloReport> excluded;
    for (size_t k = 0; k < exclusion_mechanisms().size(); k++) {
        std::vector<double> s = base.shot_errors;
        for (double &e : s) {
            e -= k < 2 ? 0.001 * (k + 1) : 0.0;
        }
        excluded.push_back(report(s));
    }
    // A constant offset per shot, so the paired SE is zero.
    ExclusionTable t = assemble_exclusion_table(base, excluded);
    ASSERT_EQ(t.rows.size(), exclusion_mechanisms().size());
    EXPECT_NEAR(t.rows[0].contribution, 0.001, 1e-15);
    EXPECT_NEAR(t.rows[1].contribution, 0.002, 1e-15);
    EXPECT_NEAR(t.rows[0].standard_error, 0.0, 1e-15);
    EXPECT_NEAR(t.rows[5].contribution, 0.0, 1e-15);
    EXPECT_NEAR(t.linear_sum, 0.003, 1e-15);
    EXPECT_NEAR(t.quadrature_sum, std::sqrt(0.001 * 0.001 + 0.002 * 0.002), 1e-15);
    EXPECT_EQ(t.rows[0].mechanism, exclusion_mechanisms()[0]);
}

TEST(exclusion, failed_shots_are_skipped) {
    double nan = std::numeric_limits<double>::quiet_NaN();
    MonteCarloReport base = report({0.01, 0.02, 0.03});
    base.shot_errors[1] = nan;
    std::vector<MonteCarloReport> excluded(exclusion_mechanisms().size(), report({0.005, 0.5, 0.025}));
    ExclusionTable t = assemble_exclusion_table(base, excluded);
    EXPECT_NEAR(t.rows[3].contribution, 0.005, 1e-15);
}

TEST(exclusion, shot_count_mismatch_rejected) {
    std::vector<MonteCarloReport> excluded(exclusion_mechanisms().size(), report({0.01}));
    EXPECT_THROW(assemble_exclusion_table(report({0.01, 0.02}), excluded), std::invalid_argument);
}

TEST(exclusion, csv_has_one_row_per_mechanism) {
    MonteCarloReport base = report({0.01, 0.02});
    std::vector<MonteCarloReport> excluded(exclusion_mechanisms().size(), report({0.009, 0.019}));
    ExclusionTable t = assemble_exclusion_table(base, excluded);
    std::string csv = format_exclusion_csv(t);
    EXPECT_GE(count_lines(csv), 1 + static_cast<int>(exclusion_mechanisms().size()));
    std::string text = format_exclusion_text(t);
    for (const auto &row : t.rows) {
        EXPECT_NE(text.find(row.name), std::string::npos) << row.name;
    }
}

TEST(exclusion, real_rows_are_paired_and_ordered) {
    const auto &gate = current_optimum().gate;
    ExclusionTable t = exclusion_table(current_params(), gate, 12, 5);
    ASSERT_EQ(t.rows.size(), 14u);
    double lin = 0;
    for (const auto &row : t.rows) {
        lin += row.contribution;
        EXPECT_TRUE(std::isfinite(row.contribution));
    }
    EXPECT_NEAR(lin, t.linear_sum, 1e-12);
    // Common random numbers: the row equals the difference of two
    // independent calls with the same seed.
    auto without = monte_carlo_error(
        current_params(), gate, MechanismMask::all().without(exclusion_mechanisms()[0]), 12, 5);
    EXPECT_NEAR(t.rows[0].contribution, t.baseline.mean_error - without.mean_error, 1e-14);
}

}  // namespace rydsim
