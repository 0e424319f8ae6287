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

#ifndef RYDSIM_ANALYSIS_DATA_FILES_H
#define RYDSIM_ANALYSIS_DATA_FILES_H

#include <stdexcept>
#include <string>
#include <vector>

#include "rydsim/analysis/fidelity.h"

namespace rydsim {

/// Malformed data file; the message names the line.
class DataFormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Comma separated rows. Blank lines and lines starting with '#' are
/// skipped, and a first row whose cells are not all numeric is treated as a
/// header.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<int> line_numbers;
};

CsvTable parse_csv(const std::string &text, size_t expected_columns);
std::string read_text_file(const std::string &path);

struct RbData {
    std::vector<int> depths;
    std::vector<double> probs;
    std::vector<long> shots;

    /// Binomial weights shots / (p (1 - p)), with p clipped away from 0 and 1
    /// by half a count.
    std::vector<double> binomial_weights() const;
};

/// depth, probability, shots
RbData parse_rb_csv(const std::string &text);
/// state label, correct count, incorrect count
std::vector<QndCounts> parse_qnd_csv(const std::string &text);
/// time, value
void parse_decay_csv(const std::string &text, std::vector<double> &times, std::vector<double> &values);

}  // namespace rydsim

#endif
