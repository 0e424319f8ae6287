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

#include "rydsim/analysis/data_files.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rydsim {

namespace {

std::string trim(const std::string &s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_number(const std::string &cell, double &out) {
    const char *begin = cell.data();
    const char *end = cell.data() + cell.size();
    if (begin != end && *begin == '+') {
        begin++;
    }
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

double number_at(const CsvTable &t, size_t row, size_t col) {
    double v;
    if (!parse_number(t.rows[row][col], v)) {
        throw DataFormatError(
            "line " + std::to_string(t.line_numbers[row]) + ": column " + std::to_string(col + 1) +
            " is not a number ('" + t.rows[row][col] + "')");
    }
    return v;
}

long count_at(const CsvTable &t, size_t row, size_t col) {
    double v = number_at(t, row, col);
    if (v < 0 || v != std::floor(v)) {
        throw DataFormatError(
            "line " + std::to_string(t.line_numbers[row]) + ": column " + std::to_string(col + 1) +
            " must be a non-negative integer");
    }
    return static_cast<long>(v);
}

}  // namespace

CsvTable parse_csv(const std::string &text, size_t expected_columns) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    bool first = true;
    while (std::getline(in, line)) {
        number++;
        std::string content = trim(line);
        if (content.empty() || content.front() == '#') {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(content);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(trim(cell));
        }
        if (content.back() == ',') {
            cells.push_back("");
        }
        if (cells.size() != expected_columns) {
            throw DataFormatError(
                "line " + std::to_string(number) + ": expected " + std::to_string(expected_columns) +
                " columns, found " + std::to_string(cells.size()));
        }
        if (first) {
            first = false;
            double dummy;
            bool numeric_tail = std::all_of(
                cells.begin() + 1, cells.end(), [&](const std::string &c) { return parse_number(c, dummy); });
            if (!numeric_tail) {
                table.header = cells;
                continue;
            }
        }
        table.rows.push_back(cells);
        table.line_numbers.push_back(number);
    }
    if (table.rows.empty()) {
        throw DataFormatError("no data rows");
    }
    return table;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataFormatError("cannot open data file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<double> RbData::binomial_weights() const {
    std::vector<double> w;
    for (size_t i = 0; i < probs.size(); i++) {
        double n = static_cast<double>(shots[i]);
        double half = 0.5 / n;
        double p = std::clamp(probs[i], half, 1 - half);
        w.push_back(n / (p * (1 - p)));
    }
    return w;
}

RbData parse_rb_csv(const std::string &text) {
    CsvTable t = parse_csv(text, 3);
    RbData d;
    for (size_t i = 0; i < t.rows.size(); i++) {
        d.depths.push_back(static_cast<int>(count_at(t, i, 0)));
        double p = number_at(t, i, 1);
        if (p < 0 || p > 1) {
            throw DataFormatError("line " + std::to_string(t.line_numbers[i]) + ": probability outside [0, 1]");
        }
        d.probs.push_back(p);
        long shots = count_at(t, i, 2);
        if (shots == 0) {
            throw DataFormatError("line " + std::to_string(t.line_numbers[i]) + ": shot count must be positive");
        }
        d.shots.push_back(shots);
    }
    return d;
}

std::vector<QndCounts> parse_qnd_csv(const std::string &text) {
    CsvTable t = parse_csv(text, 3);
    std::vector<QndCounts> out;
    for (size_t i = 0; i < t.rows.size(); i++) {
        QndCounts c;
        c.label = t.rows[i][0];
        c.correct = count_at(t, i, 1);
        c.incorrect = count_at(t, i, 2);
        out.push_back(c);
    }
    return out;
}

void parse_decay_csv(const std::string &text, std::vector<double> &times, std::vector<double> &values) {
    CsvTable t = parse_csv(text, 2);
    times.clear();
    values.clear();
    for (size_t i = 0; i < t.rows.size(); i++) {
        times.push_back(number_at(t, i, 0));
        values.push_back(number_at(t, i, 1));
    }
}

}  // namespace rydsim
