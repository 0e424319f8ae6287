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

#include "rydsim/noise/noise_sample.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "rydsim/util/hash.h"
#include "rydsim/util/units.h"

namespace rydsim {

namespace {

enum Stream : uint64_t {
    kPositionStream = 1,
    kShotStream = 2,
    kStaticStream = 3,
};

constexpr int kMaxPositionRedraws = 1000;

double beam_profile(const Vec2 &offset_um, double waist_um) {
    double r2 = offset_um[0] * offset_um[0] + offset_um[1] * offset_um[1];
    return std::exp(-2.0 * r2 / (waist_um * waist_um));
}

}  // namespace

NoiseSample NoiseSample::nominal(MechanismMask mask) {
    NoiseSample s;
    s.mask = mask;
    return s;
}

std::array<std::array<Vec2, 2>, 2> draw_static_misalignment(const SystemParams &params, uint64_t seed) {
    std::mt19937_64 rng(stream_seed(seed, kStaticStream, 0));
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::array<std::array<Vec2, 2>, 2> out{};
    for (auto &atom : out) {
        for (auto &beam : atom) {
            double a = angle(rng);
            beam = {params.static_pointing_error_nm * std::cos(a), params.static_pointing_error_nm * std::sin(a)};
        }
    }
    return out;
}

double atom_separation(const SystemParams &params, const NoiseSample &sample) {
    const Vec3 &a = sample.atoms[0].position_um;
    const Vec3 &b = sample.atoms[1].position_um;
    double dx = params.atom_separation_um + b[0] - a[0];
    double dy = b[1] - a[1];
    double dz = b[2] - a[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

NoiseSample sample_shot(const SystemParams &params, const MechanismMask &mask, uint64_t seed, uint64_t index) {
    NoiseSample s;
    s.mask = mask;

    // Positions come from their own stream so that separation-floor redraws
    // do not shift the other variables.
    if (mask.enabled(Mechanism::kLocalization)) {
        std::mt19937_64 rng(stream_seed(seed, kPositionStream, index));
        std::normal_distribution<double> normal(0.0, 1.0);
        std::array<LocalizationSigmas, 2> sig{
            localization_sigmas(params.trap(0)), localization_sigmas(params.trap(1))};
        for (int attempt = 0;; attempt++) {
            for (int k = 0; k < 2; k++) {
                s.atoms[k].position_um = {
                    sig[k].radial_um * normal(rng), sig[k].radial_um * normal(rng), sig[k].axial_um * normal(rng)};
            }
            if (atom_separation(params, s) >= params.separation_floor_um) {
                break;
            }
            if (attempt >= kMaxPositionRedraws) {
                throw std::runtime_error("atom positions repeatedly fell below the separation floor");
            }
            s.rejected_draws++;
        }
    }

    std::mt19937_64 rng(stream_seed(seed, kShotStream, index));
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    double pointing_sigma = params.dynamic_pointing_std_nm / std::sqrt(2.0);
    for (int k = 0; k < 2; k++) {
        AtomDraw &a = s.atoms[k];
        double v_sigma = std::sqrt(
            kBoltzmann * params.atom_temperature_uk * 1e-6 / (params.species[k].mass_amu * kAtomicMassUnit));
        for (double &v : a.velocity_m_s) {
            v = v_sigma * normal(rng);
        }
        a.energy_factor[kBlue] = 1.0 + params.blue_energy_std * normal(rng);
        a.energy_factor[kRed] = 1.0 + params.red_energy_std * normal(rng);
        for (auto &beam : a.pointing_nm) {
            beam = {pointing_sigma * normal(rng), pointing_sigma * normal(rng)};
        }
        a.rabi_mismatch = 1.0 + params.rabi_mismatch_half_width * uniform(rng);
        a.laser_detuning_khz = params.laser_detuning_std_khz * normal(rng);
    }
    s.magnetic_detuning_khz = params.magnetic_detuning_std_khz * normal(rng);
    s.electric_detuning_khz = params.electric_detuning_std_khz * normal(rng);

    auto statics = draw_static_misalignment(params, seed);
    for (int k = 0; k < 2; k++) {
        s.atoms[k].static_offset_nm = statics[k];
    }

    for (AtomDraw &a : s.atoms) {
        if (!mask.enabled(Mechanism::kDoppler)) {
            a.velocity_m_s = {};
        }
        if (!mask.enabled(Mechanism::kPulseEnergyBlue)) {
            a.energy_factor[kBlue] = 1.0;
        }
        if (!mask.enabled(Mechanism::kPulseEnergyRed)) {
            a.energy_factor[kRed] = 1.0;
        }
        if (!mask.enabled(Mechanism::kPointingFluctuation)) {
            a.pointing_nm = {};
        }
        if (!mask.enabled(Mechanism::kStaticMisalignment)) {
            a.static_offset_nm = {};
        }
        if (!mask.enabled(Mechanism::kRabiMismatch)) {
            a.rabi_mismatch = 1.0;
        }
        if (!mask.enabled(Mechanism::kLaserFrequencyNoise)) {
            a.laser_detuning_khz = 0.0;
        }
    }
    if (!mask.enabled(Mechanism::kMagneticNoise)) {
        s.magnetic_detuning_khz = 0.0;
    }
    if (!mask.enabled(Mechanism::kElectricNoise)) {
        s.electric_detuning_khz = 0.0;
    }
    return s;
}

ResolvedDrives resolve_drives(const SystemParams &params, const NoiseSample &sample, const GateParams &gate) {
    const MechanismMask &mask = sample.mask;
    ResolvedDrives out;
    double rabi0 = mhz_to_rad_s(params.two_photon_rabi_mhz);
    double correlated = khz_to_rad_s(sample.magnetic_detuning_khz + sample.electric_detuning_khz);
    std::array<bool, 2> finite_beam{
        mask.enabled(Mechanism::kFiniteBeamBlue), mask.enabled(Mechanism::kFiniteBeamRed)};

    for (int k = 0; k < 2; k++) {
        const SpeciesParams &sp = params.species[k];
        const AtomDraw &a = sample.atoms[k];
        std::array<double, 2> waist{sp.blue_waist_um, sp.red_waist_um};
        std::array<double, 2> intensity{};
        for (int beam = 0; beam < 2; beam++) {
            const Vec2 &st = a.static_offset_nm[beam];
            const Vec2 &pt = a.pointing_nm[beam];
            Vec2 offset{(st[0] + pt[0]) * 1e-3, (st[1] + pt[1]) * 1e-3};
            if (finite_beam[beam]) {
                offset[0] -= a.position_um[0];
                offset[1] -= a.position_um[1];
            }
            double profile = 1.0;
            if (offset[0] != 0 || offset[1] != 0 || st[0] != 0 || st[1] != 0) {
                Vec2 st_um{st[0] * 1e-3, st[1] * 1e-3};
                profile = beam_profile(offset, waist[beam]) / beam_profile(st_um, waist[beam]);
            }
            intensity[beam] = a.energy_factor[beam] * profile;
        }

        AtomDriveSpec &d = out.drives[k];
        d.rabi_two_photon = rabi0 * std::sqrt(intensity[kBlue] * intensity[kRed]) * a.rabi_mismatch;
        double stark = sp.blue_dls_mhz * (intensity[kBlue] - 1.0) + sp.red_dls() * (intensity[kRed] - 1.0);
        double doppler = sp.effective_wavevector() * a.velocity_m_s[static_cast<int>(params.doppler_axis)];
        d.two_photon_detuning = mhz_to_rad_s(stark) + doppler + correlated + khz_to_rad_s(a.laser_detuning_khz);
        if (mask.enabled(Mechanism::kIntermediateDecay)) {
            d.decay_rate_1 = sp.scattering_rate_ground() * intensity[kBlue];
            d.decay_rate_r = sp.scattering_rate_rydberg() * intensity[kRed];
        }
        if (mask.enabled(Mechanism::kRydbergDecay)) {
            d.rydberg_decay_rate = 1.0 / (sp.rydberg_lifetime_us * 1e-6);
        }
        d = drive_with_gate(d, gate);
    }

    double factor = 1.0;
    if (mask.enabled(Mechanism::kBlockadeFluctuation)) {
        double ratio = params.atom_separation_um / atom_separation(params, sample);
        double r2 = ratio * ratio;
        factor = r2 * r2 * r2;
    }
    out.blockade = mhz_to_rad_s(params.blockade_mhz) * factor;
    return out;
}

}  // namespace rydsim
