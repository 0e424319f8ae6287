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

#ifndef RYDSIM_UTIL_UNITS_H
#define RYDSIM_UTIL_UNITS_H

#include <numbers>

namespace rydsim {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// CODATA 2018 exact / recommended values, SI.
inline constexpr double kBoltzmann = 1.380649e-23;        // J/K
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg
inline constexpr double kSpeedOfLight = 299792458.0;      // m/s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
// Atomic unit of electric polarizability, C m^2 / V.
inline constexpr double kAtomicUnitPolarizability = 1.64877727436e-41;

inline constexpr double kMicro = 1e-6;
inline constexpr double kNano = 1e-9;
inline constexpr double kMilli = 1e-3;

/// Converts a frequency quoted in Hz to an angular frequency in rad/s.
constexpr double angular(double hz) { return kTwoPi * hz; }
constexpr double mhz_to_rad_s(double mhz) { return kTwoPi * mhz * 1e6; }
constexpr double khz_to_rad_s(double khz) { return kTwoPi * khz * 1e3; }
constexpr double ghz_to_rad_s(double ghz) { return kTwoPi * ghz * 1e9; }
constexpr double rad_s_to_mhz(double w) { return w / kTwoPi * 1e-6; }

}  // namespace rydsim

#endif
