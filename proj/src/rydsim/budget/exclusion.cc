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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "rydsim/util/key_value_file.h"

namespace rydsim {

namespace {

struct PairedStats {
    double mean = 0.0;
    double standard_error = 0.0;
};

PairedStats paired(const std::vector<double> &values) {
    PairedStats out;
    long n = 0;
    double sum = 0;
    for (double v : values) {
        if (!std::isnan(v)) {
            sum += v;
            n++;
        }
    }
    if (n == 0) {
        out.mean = std::nan("");
        return out;
    }
    out.mean = sum / n;
    double ss = 0;
    for (double v : values) {
        if (!std::isnan(v)) {
            ss += (v - out.mean) * (v - out.mean);
        }
    }
    out.standard_error = n > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0;
    return out;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

}  // namespace

ExclusionTable assemble_exclusion_table(MonteCarloReport baseline, const std::vector<MonteCarloReport> &excluded) {
    const auto &mechanisms = exclusion_mechanisms();
    if (excluded.size() != mechanisms.size()) {
        throw std::invalid_argument("one excluded run per mechanism is required.");
    }
    size_t n = baseline.shot_errors.size();
    ExclusionTable table;
    std::vector<double> linear(n, 0.0);
    double quad_sq = 0;
    double quad_var_num = 0;
    for (size_t k = 0; k < mechanisms.size(); k++) {
        if (excluded[k].shot_errors.size() != n) {
            throw std::invalid_argument("excluded run has a different shot count.");
        }
        std::vector<double> diff(n);
        for (size_t i = 0; i < n; i++) {
            diff[i] = baseline.shot_errors[i] - excluded[k].shot_errors[i];
            linear[i] += diff[i];
        }
        PairedStats s = paired(diff);
        BudgetRow row;
        row.mechanism = mechanisms[k];
        row.name = std::string(mechanism_label(mechanisms[k]));
        row.contribution = s.mean;
        row.standard_error = s.standard_error;
        table.rows.push_back(row);
        quad_sq += s.mean * s.mean;
        quad_var_num += s.mean * s.mean * s.standard_error * s.standard_error;
    }
    PairedStats lin = paired(linear);
    table.linear_sum = lin.mean;
    table.linear_sum_standard_error = lin.standard_error;
    table.quadrature_sum = std::sqrt(quad_sq);
    table.quadrature_sum_standard_error = quad_sq > 0 ? std::sqrt(quad_var_num / quad_sq) : 0.0;
    table.baseline = std::move(baseline);
    return table;
}

ExclusionTable exclusion_table(
    const SystemParams &params, const GateParams &gate, long shots, uint64_t seed, const MonteCarloOptions &options) {
    MonteCarloOptions keep = options;
    keep.keep_shot_errors = true;
    MonteCarloReport baseline = monte_carlo_error(params, gate, MechanismMask::all(), shots, seed, keep);
    std::vector<MonteCarloReport> excluded;
    for (Mechanism m : exclusion_mechanisms()) {
        excluded.push_back(monte_carlo_error(params, gate, MechanismMask::all().without(m), shots, seed, keep));
    }
    return assemble_exclusion_table(std::move(baseline), excluded);
}

std::string format_exclusion_text(const ExclusionTable &table) {
    size_t width = 24;
    for (const auto &row : table.rows) {
        width = std::max(width, row.name.size());
    }
    auto line = [&](const std::string &name, double value, double se) {
        std::string out = name;
        out.append(width + 2 - name.size(), ' ');
        out += fixed(value, 6) + " +- " + fixed(se, 6) + "\n";
        return out;
    };
    std::string out = "mechanism";
    out.append(width + 2 - 9, ' ');
    out += "contribution\n";
    for (const auto &row : table.rows) {
        out += line(row.name, row.contribution, row.standard_error);
    }
    out += line("total error", table.baseline.mean_error, table.baseline.standard_error);
    out += line("linear sum", table.linear_sum, table.linear_sum_standard_error);
    out += line("quadrature sum", table.quadrature_sum, table.quadrature_sum_standard_error);
    return out;
}

std::string format_exclusion_csv(const ExclusionTable &table) {
    std::string out = "mechanism,contribution,standard_error\n";
    auto row = [&](const std::string &id, double v, double se) {
        out += id + "," + format_double(v) + "," + format_double(se) + "\n";
    };
    for (const auto &r : table.rows) {
        row(std::string(mechanism_id(r.mechanism)), r.contribution, r.standard_error);
    }
    row("total", table.baseline.mean_error, table.baseline.standard_error);
    row("linear_sum", table.linear_sum, table.linear_sum_standard_error);
    row("quadrature_sum", table.quadrature_sum, table.quadrature_sum_standard_error);
    return out;
}

}  // namespace rydsim
