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

#include "rydsim/cli/run_manifest.h"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "rydsim/util/hash.h"

namespace rydsim {

void RunManifest::add_input(const std::string &path) { inputs.emplace_back(path, hash_file(path)); }

std::string RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["inputs"] = nlohmann::ordered_json::array();
    for (const auto &[path, hash] : inputs) {
        j["inputs"].push_back({{"path", path}, {"fnv1a64", hash}});
    }
    j["seed"] = seed;
    j["shots"] = shots;
    j["wall_time_s"] = wall_time_s;
    j["artifacts"] = artifacts;
    return j.dump(2) + "\n";
}

ArtifactWriter::ArtifactWriter(std::string out_dir, RunManifest &manifest)
    : out_dir_(std::move(out_dir)), manifest_(manifest) {}

std::string ArtifactWriter::path(const std::string &name) const {
    return (std::filesystem::path(out_dir_) / name).string();
}

void ArtifactWriter::write(const std::string &name, const std::string &content) {
    std::filesystem::create_directories(out_dir_);
    std::string p = path(name);
    std::ofstream out(p, std::ios::binary);
    out << content;
    if (!out) {
        throw std::runtime_error("cannot write '" + p + "'");
    }
    manifest_.artifacts.push_back(p);
}

void ArtifactWriter::finish(double wall_time_s) {
    manifest_.wall_time_s = wall_time_s;
    std::filesystem::create_directories(out_dir_);
    std::string p = path("manifest.json");
    std::ofstream out(p, std::ios::binary);
    out << manifest_.to_json();
    if (!out) {
        throw std::runtime_error("cannot write '" + p + "'");
    }
}

}  // namespace rydsim
