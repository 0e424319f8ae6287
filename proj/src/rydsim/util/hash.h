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

#ifndef RYDSIM_UTIL_HASH_H
#define RYDSIM_UTIL_HASH_H

#include <cstdint>
#include <string>
#include <string_view>

namespace rydsim {

/// 64-bit FNV-1a. Stable across platforms; used to fingerprint input files in
/// run manifests, not for security.
constexpr uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : data) {
        h ^= static_cast<uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(uint64_t value);

/// Hex FNV-1a of a file's bytes. Throws std::runtime_error if unreadable.
std::string hash_file(const std::string &path);

/// SplitMix64 finalizer; turns structured (seed, index) pairs into well-mixed
/// engine seeds.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr uint64_t stream_seed(uint64_t seed, uint64_t stream, uint64_t index) {
    return splitmix64(splitmix64(seed ^ splitmix64(stream)) + index);
}

}  // namespace rydsim

#endif
