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

// Acceptance run: one PASS/FAIL line per criterion, with the numbers behind
// each verdict printed underneath. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rabi_trajectory.h"
#include "rydsim/analysis/data_files.h"
#include "rydsim/analysis/fidelity.h"
#include "rydsim/budget/exclusion.h"
#include "rydsim/budget/optimize.h"
#include "rydsim/cli/app.h"
#include "rydsim/laser/laser_noise.h"
#include "rydsim/noise/system_params.h"
#include "rydsim/qnd/simulator.h"
#include "rydsim/testing/paths.h"
#include "rydsim/trap/trap_physics.h"
#include "rydsim/util/units.h"

using namespace rydsim;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> lines;
    bool ok = true;

    void check(bool pass, const std::string &what) {
        ok = ok && pass;
        lines.push_back(std::string(pass ? "ok   " : "FAIL ") + what);
    }
    void note(const std::string &what) { lines.push_back("     " + what); }
};

std::string fmt(const char *f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char *f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void run(int number, const std::string &title, const std::function<void(Criterion &)> &body) {
    Criterion c{number, title, {}};
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception &e) {
        c.check(false, std::string("exception: ") + e.what());
    }
    double wall = seconds_since(t0);
    std::printf("%s criterion %d: %s (%.1f s)\n", c.ok ? "PASS" : "FAIL", number, title.c_str(), wall);
    for (const auto &l : c.lines) {
        std::printf("    %s\n", l.c_str());
    }
    std::fflush(stdout);
    failures += !c.ok;
}

const SystemParams &current() {
    static SystemParams p = SystemParams::load(source_path("configs/current.cfg"));
    return p;
}

const OptimizeResult &current_gate() {
    static OptimizeResult r = optimize_gate(current());
    return r;
}

// Shared between criteria 2 and 3: one paired exclusion run at 10^4 shots.
const ExclusionTable &current_table() {
    static ExclusionTable t = exclusion_table(current(), current_gate().gate, 10000, 1);
    return t;
}

void criterion_1(Criterion &c) {
    auto t0 = std::chrono::steady_clock::now();
    SystemParams p = current();
    p.blockade_mhz = 1000.0;
    OptimizeOptions o;
    o.mask = MechanismMask::noiseless().without(Mechanism::kIntermediateDecay).without(Mechanism::kRydbergDecay);
    OptimizeResult ideal = optimize_gate(p, o);
    c.check(ideal.error <= 1e-6, fmt("no decay, B = 2pi x 1000 MHz: error %.3e <= 1e-6", ideal.error));

    const OptimizeResult &r = current_gate();
    double excess = r.error - r.decay_floor;
    c.check(
        std::abs(excess) <= 2e-4,
        fmt("current decay: error %.6e, floor %.6e, |excess| %.2e <= 2e-4", r.error, r.decay_floor, std::abs(excess)));
    double wall = seconds_since(t0);
    c.check(wall <= 300, fmt("runtime %.1f s <= 300 s", wall));
}

void criterion_2(Criterion &c) {
    auto t0 = std::chrono::steady_clock::now();
    const MonteCarloReport &cur = current_table().baseline;
    c.check(
        cur.mean_error >= 0.015 && cur.mean_error <= 0.035,
        fmt("current.cfg total %.5f +- %.5f in [0.015, 0.035] (10^4 shots)", cur.mean_error, cur.standard_error));

    SystemParams proj = SystemParams::load(source_path("configs/projected.cfg"));
    OptimizeResult g = optimize_gate(proj);
    MonteCarloReport pr = monte_carlo_error(proj, g.gate, MechanismMask::all(), 10000, 1);
    c.check(
        pr.mean_error >= 0.002 && pr.mean_error <= 0.006,
        fmt("projected.cfg total %.6f +- %.6f in [0.002, 0.006] (10^4 shots)", pr.mean_error, pr.standard_error));
    double wall = seconds_since(t0);
    c.check(wall <= 1800, fmt("runtime %.1f s <= 1800 s (includes the 15-run exclusion for criterion 3)", wall));
}

void criterion_3(Criterion &c) {
    const ExclusionTable &t = current_table();
    std::vector<BudgetRow> rows = t.rows;
    std::stable_sort(rows.begin(), rows.end(), [](const BudgetRow &a, const BudgetRow &b) {
        return a.contribution > b.contribution;
    });
    for (size_t k = 0; k < 5 && k < rows.size(); k++) {
        c.note(fmt("%zu. %-34s %.5f +- %.5f", k + 1, rows[k].name.c_str(), rows[k].contribution, rows[k].standard_error));
    }
    c.check(
        rows.front().mechanism == Mechanism::kIntermediateDecay,
        "top-ranked mechanism is intermediate-state decay");
    std::set<Mechanism> reference{
        Mechanism::kIntermediateDecay, Mechanism::kPulseEnergyBlue, Mechanism::kRydbergDecay, Mechanism::kDoppler};
    int matched = 0;
    for (size_t k = 0; k < 4; k++) {
        matched += reference.count(rows[k].mechanism);
    }
    c.check(matched >= 3, fmt("%d of 4 top mechanisms match the reference top four", matched));
    double total = t.baseline.mean_error;
    double gap = std::abs(t.linear_sum - total);
    c.check(
        gap <= 0.25 * total,
        fmt("|linear sum %.5f - total %.5f| = %.5f <= %.5f", t.linear_sum, total, gap, 0.25 * total));
    c.note(fmt("quadrature sum %.5f", t.quadrature_sum));
}

TrapSpec trap(double t_uk, double u_mk) {
    TrapSpec s;
    s.waist_um = 1.7;
    s.wavelength_nm = 1064;
    s.temperature_uk = t_uk;
    s.depth_mk = u_mk;
    s.power_mw = 1;
    return s;
}

double round_to(double v, double step) { return std::round(v / step) * step; }

void criterion_4(Criterion &c) {
    double rb = adiabatic_temperature(15.4, 1.1, 0.073);
    double cs = adiabatic_temperature(17.3, 2.0, 0.136);
    c.check(std::abs(rb - 3.97) <= 0.01, fmt("Rb adiabatic temperature %.4f uK vs 3.97 +- 0.01", rb));
    c.check(std::abs(cs - 4.51) <= 0.01, fmt("Cs adiabatic temperature %.4f uK vs 4.51 +- 0.01", cs));
    LocalizationSigmas srb = localization_sigmas(trap(15.4, 1.1));
    LocalizationSigmas scs = localization_sigmas(trap(4.3, 0.136));
    bool rb_ok = round_to(srb.radial_um, 0.01) == round_to(0.10, 0.01) &&
                 round_to(srb.axial_um, 0.01) == round_to(0.71, 0.01);
    bool cs_ok = round_to(scs.radial_um, 0.01) == round_to(0.15, 0.01) &&
                 round_to(scs.axial_um, 0.1) == round_to(1.1, 0.1);
    c.check(rb_ok, fmt("Rb sigmas (%.4f, %.4f) um vs (0.10, 0.71)", srb.radial_um, srb.axial_um));
    c.check(cs_ok, fmt("Cs sigmas (%.4f, %.4f) um vs (0.15, 1.1)", scs.radial_um, scs.axial_um));
}

void criterion_5(Criterion &c) {
    BlockadeModel m = BlockadeModel::calibrated(12.01, 5.85);
    double b = blockade_point(m, 5.85);
    c.check(b == 12.01, fmt("B(5.85 um) = %.17g MHz", b));

    // Final-condition spreads from the adiabatically lowered traps.
    LocalizationSigmas rb = localization_sigmas(trap(adiabatic_temperature(15.4, 1.1, 0.073), 0.073));
    LocalizationSigmas cs = localization_sigmas(trap(4.3, 0.136));
    c.note(fmt("spreads: Rb (%.3f, %.3f) um, Cs (%.3f, %.3f) um", rb.radial_um, rb.axial_um, cs.radial_um, cs.axial_um));
    PositionDistribution a{{0, 0, 0}, {rb.radial_um, rb.radial_um, rb.axial_um}};
    PositionDistribution d{{5.85, 0, 0}, {cs.radial_um, cs.radial_um, cs.axial_um}};
    AverageBlockade q = average_blockade_quadrature(a, d, m);
    AverageBlockade mc = average_blockade(a, d, m, 1000000, 1);
    double se = std::hypot(q.standard_error_mhz, mc.standard_error_mhz);
    double gap = std::abs(q.mean_mhz - mc.mean_mhz);
    c.check(
        gap <= 3 * se, fmt("quadrature %.5f vs Monte Carlo %.5f +- %.5f MHz (10^6 samples): gap %.5f <= %.5f",
                           q.mean_mhz, mc.mean_mhz, mc.standard_error_mhz, gap, 3 * se));
    c.check(q.mean_mhz > b, fmt("<B> = %.4f MHz > B(d) = %.2f MHz", q.mean_mhz, b));

    PositionDistribution a_plane{{0, 0, 0}, {rb.radial_um, rb.radial_um, 0}};
    PositionDistribution d_plane{{5.85, 0, 0}, {cs.radial_um, cs.radial_um, 0}};
    c.note(fmt(
        "diagnostic: in-plane spreads only give <B> = %.4f MHz; the axial spread is perpendicular to the separation",
        average_blockade_quadrature(a_plane, d_plane, m).mean_mhz));
}

void criterion_6(Criterion &c) {
    LaserNoiseModel white;
    white.h0 = 2.0;
    white.delay = fiber_delay(10e3, 1.468);
    double omega = mhz_to_rad_s(1.0);
    double eps = rabi_error(white, omega, 2);
    c.check(eps < 1e-3, fmt("white-noise error %.4e < 1e-3", eps));
    auto oracle = rydsim_oracles::rabi_trajectory_error([](double) { return 2.0; }, omega, 2);
    double rel = std::abs(eps - oracle.mean) / oracle.mean;
    c.check(
        rel <= 0.10, fmt("trajectory oracle %.4e +- %.1e, relative difference %.3f <= 0.10", oracle.mean,
                         oracle.standard_error, rel));

    LaserNoiseModel truth = white;
    truth.bumps.push_back({400.0, 350e3, 40e3});
    truth.dark_floor = 1e-12;
    std::mt19937_64 rng(4);
    std::normal_distribution<double> noise(0.0, 0.01);
    std::vector<double> fs;
    std::vector<double> ys;
    for (int i = 0; i < 600; i++) {
        double f = 2e3 * std::pow(1000.0, i / 599.0);
        fs.push_back(f);
        ys.push_back(heterodyne_spectrum(truth, f) * (1.0 + noise(rng)));
    }
    LaserNoiseModel start = truth;
    start.h0 = 3.0;
    start.bumps[0] = {250.0, 330e3, 50e3};
    start.dark_floor = 3e-12;
    HeterodyneFit fit = fit_heterodyne(fs, ys, start);
    double h0_rel = std::abs(fit.model.h0 - truth.h0) / truth.h0;
    c.check(
        fit.converged && h0_rel <= 0.05,
        fmt("heterodyne round trip at 1%% noise: h0 %.4f vs 2 (relative %.4f <= 0.05)", fit.model.h0, h0_rel));

    double norm_white = heterodyne_normalization(white);
    LaserNoiseModel bumped = truth;
    bumped.dark_floor = 0;
    double norm_bump = heterodyne_normalization(bumped);
    c.check(std::abs(norm_white - 1) <= 1e-3, fmt("integral of S, white: %.7f", norm_white));
    c.check(std::abs(norm_bump - 1) <= 1e-3, fmt("integral of S, with servo bump: %.7f", norm_bump));
}

void criterion_7(Criterion &c) {
    CzFidelity f = cz_fidelity(0.99, 0.98, 0.002);
    c.check(std::abs(f.depolarizing - 0.0180361) <= 1e-7, fmt("sigma %.9f vs 0.0180361 +- 1e-7", f.depolarizing));
    c.check(
        std::abs(f.fidelity - 0.9746556) <= 1e-7,
        fmt("F %.9f vs pinned 0.9746556 +- 1e-7 (exact rational value 0.974655)", f.fidelity));
    CzFidelity one = cz_fidelity(1, 1, 0);
    c.check(one.fidelity == 1.0, fmt("(1, 1, 0) -> %.17g", one.fidelity));

    bool beta_ok = true;
    for (long n = 0; n <= 120; n++) {
        for (long k = 0; k <= n; k++) {
            double m = beta_posterior({"", k, n - k}).mean;
            beta_ok = beta_ok && std::abs(m - double(k + 1) / double(n + 2)) <= 1e-15;
        }
    }
    c.check(beta_ok, "Beta means equal (k+1)/(n+2) for all 0 <= k <= n <= 120");
    c.check(std::abs(beta_posterior({"", 93, 7}).mean - 0.92157) < 5e-6, "k=93, n=100 -> 0.92157");

    std::vector<int> depths{0, 10, 20, 40, 60, 80, 100};
    std::vector<double> probs;
    for (int n : depths) {
        probs.push_back(0.98 * std::pow(0.99, n));
    }
    RbFit rb = fit_geometric_decay(depths, probs);
    c.check(
        std::abs(rb.amplitude - 0.98) <= 1e-10 && std::abs(rb.per_gate - 0.99) <= 1e-10,
        fmt("noiseless decay round trip: A - 0.98 = %.1e, P - 0.99 = %.1e", rb.amplitude - 0.98, rb.per_gate - 0.99));
}

std::string bits(int value, int width) {
    std::string s(width, '0');
    for (int k = 0; k < width; k++) {
        s[k] = (value >> (width - 1 - k)) & 1 ? '1' : '0';
    }
    return s;
}

void criterion_8(Criterion &c) {
    std::vector<std::string> names{"qnd2_rb_ancilla.circ", "qnd2_cs_ancilla.circ", "zz3.circ"};
    bool noiseless_ok = true;
    for (const auto &name : names) {
        PlaquetteCircuit circ = load_circuit(source_path("circuits/" + name));
        int n = static_cast<int>(circ.qubits.size());
        for (int v = 0; v < (1 << n); v++) {
            std::string in = bits(v, n);
            // Expected: data unchanged, each ancilla XORed with its data parity.
            std::string want = in;
            for (size_t q = 0; q < circ.qubits.size(); q++) {
                if (circ.qubits[q].role == QubitRole::kAncilla) {
                    int parity = 0;
                    for (int d : circ.data_qubits()) {
                        parity ^= in[d] - '0';
                    }
                    want[q] = static_cast<char>('0' + ((in[q] - '0') ^ parity));
                }
            }
            std::string want_measured;
            for (int q : circ.measured) {
                want_measured += want[q];
            }
            auto p = exact_distribution(circ, {}, in).probabilities;
            int best = static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
            bool ok = p[best] > 1 - 1e-12 && outcome_label(circ, best) == want_measured;
            if (!ok) {
                c.note(name + " input " + in + " gave " + outcome_label(circ, best) + ", expected " + want_measured);
            }
            noiseless_ok = noiseless_ok && ok;
        }
    }
    c.check(noiseless_ok, "noiseless 2- and 3-atom circuits deterministic and correct on every basis input");

    NoiseChannelParams n;
    n.depolarizing = 0.025;
    PlaquetteCircuit rb2 = load_circuit(source_path("circuits/qnd2_rb_ancilla.circ"));
    PlaquetteCircuit cs2 = load_circuit(source_path("circuits/qnd2_cs_ancilla.circ"));
    PlaquetteCircuit zz = load_circuit(source_path("circuits/zz3.circ"));
    double f_rb = predicted_fqnd(rb2, n, default_inputs(rb2));
    double f_cs = predicted_fqnd(cs2, n, default_inputs(cs2));
    double f3 = predicted_fqnd(zz, n, default_inputs(zz));
    c.check(f3 < f_rb && f3 < f_cs, fmt("sigma = 0.025: F_QND 3-atom %.5f < 2-atom %.5f (Rb), %.5f (Cs)", f3, f_rb, f_cs));

    NoiseChannelParams noisy;
    noisy.depolarizing = 0.05;
    noisy.loss = 0.02;
    noisy.leak = 0.01;
    noisy.spam = {0.01, 0.02, 0.03};
    const long shots = 100000;
    double worst = 0;
    int cells = 0;
    for (const auto &circ : {rb2, zz}) {
        for (const auto &in : default_inputs(circ)) {
            auto exact = exact_distribution(circ, noisy, in).probabilities;
            auto h = sample_histogram(circ, noisy, in, shots, 7);
            for (size_t k = 0; k < exact.size(); k++) {
                double sd = std::sqrt(shots * exact[k] * (1 - exact[k]));
                double dev = std::abs(h[k] - shots * exact[k]);
                double z = sd > 0 ? dev / sd : (dev > 0 ? 1e9 : 0.0);
                worst = std::max(worst, z);
                cells++;
            }
        }
    }
    c.check(worst <= 4.0, fmt("trajectories vs exact at 10^5 shots: worst |z| %.2f <= 4 over %d cells", worst, cells));
}

std::string slurp(const std::string &path) { return read_text_file(path); }

void criterion_9(Criterion &c) {
    std::string in = scratch_dir("acceptance_inputs");
    auto put = [&](const std::string &name, const std::string &text) {
        std::ofstream(in + "/" + name) << text;
        return in + "/" + name;
    };
    std::string trace = "# frequency_hz psd\n";
    {
        LaserNoiseModel m;
        m.h0 = 2.0;
        m.delay = fiber_delay(10e3, 1.468);
        m.bumps.push_back({400.0, 350e3, 40e3});
        m.dark_floor = 1e-12;
        std::mt19937_64 rng(8);
        std::normal_distribution<double> noise(0.0, 0.01);
        for (int i = 0; i < 300; i++) {
            double f = 2e3 * std::pow(1000.0, i / 299.0);
            trace += fmt("%.10g %.10g\n", f, heterodyne_spectrum(m, f) * (1 + noise(rng)));
        }
    }
    std::string trace_path = put("trace.txt", trace);
    std::string ret = put("ret.csv", "depth,probability,shots\n0,0.98,500\n10,0.89,500\n20,0.80,500\n40,0.66,500\n");
    std::string bb = put("bb.csv", "depth,probability,shots\n0,0.97,500\n10,0.86,500\n20,0.76,500\n40,0.60,500\n");
    std::string counts = put("counts.csv", "state,correct,incorrect\n0,93,7\n1,88,12\n");
    std::string decay = "time,value\n";
    for (int i = 0; i < 12; i++) {
        decay += fmt("%d,%.10g\n", i, 0.95 * std::exp(-i / 9.6));
    }
    std::string decay_path = put("t1.csv", decay);
    std::string cfg = source_path("configs/current.cfg");

    std::vector<std::vector<std::string>> commands{
        {"budget", "run", "--config", cfg, "--shots", "20", "--restarts", "0", "--seed", "5"},
        {"budget", "exclude", "--config", cfg, "--shots", "10", "--restarts", "0", "--seed", "5"},
        {"sweep", "2d", "--config", cfg, "--shots", "5", "--restarts", "0", "--temperatures", "2,8", "--powers",
         "2.8,10"},
        {"sweep", "adiabatic", "--config", cfg, "--shots", "5", "--restarts", "0", "--powers", "2.8,10"},
        {"laser", "fit", "--trace", trace_path, "--h0", "3", "--bump", "250,330000,50000", "--fiber-m", "10000"},
        {"laser", "rabi-error", "--h0", "2", "--bump", "400,350000,40000"},
        {"analyze", "rb", "--retention", ret, "--bright", bb},
        {"analyze", "qnd", "--counts", counts},
        {"analyze", "decay", "--data", decay_path},
        {"qnd", "simulate", "--circuit", source_path("circuits/zz3.circ"), "--depolarizing", "0.025", "--loss",
         "0.01", "--spam", "0.01", "--shots", "5000", "--seed", "3"},
    };
    for (const auto &cmd : commands) {
        std::string label = cmd[0] + " " + cmd[1];
        std::vector<std::vector<std::string>> listed;
        bool same = true;
        int codes[2];
        std::string outs[2];
        for (int rep = 0; rep < 2; rep++) {
            std::string out = scratch_dir("acceptance_" + cmd[0] + "_" + cmd[1] + "_" + std::to_string(rep));
            outs[rep] = out;
            std::vector<std::string> args = cmd;
            args.push_back("--out");
            args.push_back(out);
            std::ostringstream so;
            std::ostringstream se;
            codes[rep] = run_cli(args, so, se);
            std::vector<std::string> files;
            for (const auto &e : std::filesystem::directory_iterator(out)) {
                if (e.path().filename() != "manifest.json") {
                    files.push_back(e.path().filename().string());
                }
            }
            std::sort(files.begin(), files.end());
            listed.push_back(files);
        }
        if (codes[0] != 0 || codes[1] != 0 || listed[0] != listed[1] || listed[0].empty()) {
            same = false;
        } else {
            for (const auto &f : listed[0]) {
                same = same && slurp(outs[0] + "/" + f) == slurp(outs[1] + "/" + f);
            }
        }
        c.check(same, fmt("%-16s exit %d/%d, %zu artifacts byte-identical", label.c_str(), codes[0], codes[1],
                          listed[0].size()));
    }
}

}  // namespace

int main() {
    std::printf("rydsim acceptance\n");
    run(1, "optimized CZ reaches the decay floor", criterion_1);
    run(2, "baseline Monte Carlo totals", criterion_2);
    run(3, "exclusion table ranking and sums", criterion_3);
    run(4, "trap temperatures and localization", criterion_4);
    run(5, "blockade calibration and averaging", criterion_5);
    run(6, "laser noise error, heterodyne fit and normalization", criterion_6);
    run(7, "analysis formulas", criterion_7);
    run(8, "QND circuits", criterion_8);
    run(9, "CLI determinism", criterion_9);
    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
