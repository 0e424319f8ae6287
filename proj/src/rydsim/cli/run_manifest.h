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

#ifndef RYDSIM_CLI_RUN_MANIFEST_H
#define RYDSIM_CLI_RUN_MANIFEST_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rydsim {

/// Record of one CLI invocation: what was read, what was written.
struct RunManifest {
    std::string command;
    // (path, FNV-1a hex) for every input file, config first.
    std::vector<std::pair<std::string, std::string>> inputs;
    uint64_t seed = 0;
    long shots = 0;
    double wall_time_s = 0.0;
    std::vector<std::string> artifacts;

    void add_input(const std::string &path);
    std::string to_json() const;
};

/// Writes data files under one output directory and records them in the
/// manifest. The manifest itself is written last, as manifest.json.
class ArtifactWriter {
   public:
    ArtifactWriter(std::string out_dir, RunManifest &manifest);

    /// Writes `content` to <out_dir>/<name>; throws std::runtime_error on I/O
    /// failure.
    void write(const std::string &name, const std::string &content);
    void finish(double wall_time_s);
    std::string path(const std::string &name) const;

   private:
    std::string out_dir_;
    RunManifest &manifest_;
};

}  // namespace rydsim

#endif
