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

#include "rydsim/cli/app.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rydsim/analysis/data_files.h"
#include "rydsim/analysis/fidelity.h"
#include "rydsim/budget/exclusion.h"
#include "rydsim/budget/sweep.h"
#include "rydsim/cli/run_manifest.h"
#include "rydsim/laser/laser_noise.h"
#include "rydsim/qnd/simulator.h"
#include "rydsim/util/key_value_file.h"
#include "rydsim/util/units.h"

namespace rydsim {

namespace {

using Json = nlohmann::ordered_json;

class NumericalFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4e", v);
    return buf;
}

Json gate_json(const GateParams &g) {
    Json j;
    j["detuning_rad_s"] = g.detuning;
    j["duration_s"] = g.duration;
    j["phase_mod_rate_rad_s"] = g.phase_mod_rate;
    j["phase_mod_depth_rad"] = g.phase_mod_depth;
    j["phase_mod_delay_s"] = g.phase_mod_delay;
    j["virtual_rz_rad"] = {g.virtual_rz[0], g.virtual_rz[1]};
    return j;
}

Json report_json(const MonteCarloReport &r) {
    Json j;
    j["mask"] = r.mask.to_string();
    j["shots"] = r.shots;
    j["seed"] = r.seed;
    j["mean_error"] = r.mean_error;
    j["standard_error"] = r.standard_error;
    j["rejected_draws"] = r.rejected_draws;
    j["failures"] = r.failures;
    return j;
}

Json optimize_json(const OptimizeResult &r) {
    Json j;
    j["gate"] = gate_json(r.gate);
    j["nominal_error"] = r.error;
    j["decay_floor"] = r.decay_floor;
    j["evaluations"] = r.evaluations;
    j["runs"] = r.runs;
    return j;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------- budget ---

struct BudgetArgs {
    std::string config;
    long shots = 10000;
    uint64_t seed = 1;
    std::string out = ".";
    std::string mask = "all";
    int restarts = 4;
};

struct LoadedSystem {
    SystemParams params;
    OptimizeResult gate;
};

LoadedSystem load_and_optimize(const BudgetArgs &a, RunManifest &manifest, std::ostream &err) {
    LoadedSystem s;
    s.params = SystemParams::load(a.config);
    manifest.add_input(a.config);
    manifest.seed = a.seed;
    manifest.shots = a.shots;
    if (a.shots <= 0) {
        throw std::invalid_argument("--shots must be positive.");
    }
    OptimizeOptions opt;
    opt.seed = a.seed;
    opt.restarts = a.restarts;
    err << "optimizing gate pulse...\n";
    s.gate = optimize_gate(s.params, opt);
    if (!s.gate.success) {
        throw NumericalFailure("gate optimization failed: " + s.gate.failure_reason);
    }
    err << "nominal error " << sci(s.gate.error) << " (decay floor " << sci(s.gate.decay_floor) << ")\n";
    return s;
}

int cmd_budget_run(const BudgetArgs &a, std::ostream &out, std::ostream &err) {
    auto start = std::chrono::steady_clock::now();
    RunManifest manifest;
    manifest.command = "budget run";
    LoadedSystem s = load_and_optimize(a, manifest, err);
    MechanismMask mask = MechanismMask::parse(a.mask);
    MonteCarloReport r = monte_carlo_error(s.params, s.gate.gate, mask, a.shots, a.seed);

    std::string text = "mask            " + mask.to_string() + "\n";
    text += "shots           " + std::to_string(r.shots) + "\n";
    text += "seed            " + std::to_string(r.seed) + "\n";
    text += "total error     " + fixed(r.mean_error, 6) + " +- " + fixed(r.standard_error, 6) + "\n";
    text += "nominal error   " + sci(s.gate.error) + "\n";
    text += "rejected draws  " + std::to_string(r.rejected_draws) + "\n";
    text += "failed shots    " + std::to_string(r.failures) + "\n";

    std::string csv = "mask,shots,seed,mean_error,standard_error,rejected_draws,failures\n";
    csv += mask.to_string() + "," + std::to_string(r.shots) + "," + std::to_string(r.seed) + "," +
           format_double(r.mean_error) + "," + format_double(r.standard_error) + "," +
           std::to_string(r.rejected_draws) + "," + std::to_string(r.failures) + "\n";

    std::string shots = "shot,error\n";
    for (size_t i = 0; i < r.shot_errors.size(); i++) {
        shots += std::to_string(i) + "," + (std::isnan(r.shot_errors[i]) ? "nan" : format_double(r.shot_errors[i])) +
                 "\n";
    }

    Json j;
    j["report"] = report_json(r);
    j["optimization"] = optimize_json(s.gate);

    ArtifactWriter w(a.out, manifest);
    w.write("budget_run.txt", text);
    w.write("budget_run.csv", csv);
    w.write("budget_run.json", j.dump(2) + "\n");
    w.write("shot_errors.csv", shots);
    w.finish(elapsed_since(start));
    out << text;
    return kExitOk;
}

int cmd_budget_exclude(const BudgetArgs &a, std::ostream &out, std::ostream &err) {
    auto start = std::chrono::steady_clock::now();
    RunManifest manifest;
    manifest.command = "budget exclude";
    LoadedSystem s = load_and_optimize(a, manifest, err);
    err << "running baseline and " << exclusion_mechanisms().size() << " exclusions...\n";
    ExclusionTable t = exclusion_table(s.params, s.gate.gate, a.shots, a.seed);

    Json j;
    j["baseline"] = report_json(t.baseline);
    j["rows"] = Json::array();
    for (const auto &row : t.rows) {
        j["rows"].push_back({{"mechanism", std::string(mechanism_id(row.mechanism))},
                             {"name", row.name},
                             {"contribution", row.contribution},
                             {"standard_error", row.standard_error}});
    }
    j["linear_sum"] = {{"value", t.linear_sum}, {"standard_error", t.linear_sum_standard_error}};
    j["quadrature_sum"] = {{"value", t.quadrature_sum}, {"standard_error", t.quadrature_sum_standard_error}};
    j["optimization"] = optimize_json(s.gate);

    std::string text = format_exclusion_text(t);
    ArtifactWriter w(a.out, manifest);
    w.write("exclusion.txt", text);
    w.write("exclusion.csv", format_exclusion_csv(t));
    w.write("exclusion.json", j.dump(2) + "\n");
    w.finish(elapsed_since(start));
    out << text;
    return kExitOk;
}

// ----------------------------------------------------------------- sweep ---

struct SweepArgs {
    BudgetArgs base;
    std::vector<double> temperatures{1, 2, 4, 8, 16};
    std::vector<double> powers{1, 2.8, 10, 40};
};

int cmd_sweep_2d(const SweepArgs &a, std::ostream &out, std::ostream &err) {
    auto start = std::chrono::steady_clock::now();
    RunManifest manifest;
    manifest.command = "sweep 2d";
    LoadedSystem s = load_and_optimize(a.base, manifest, err);
    MechanismMask mask = MechanismMask::parse(a.base.mask);
    auto points = sweep_temperature_power(s.params, s.gate.gate, a.temperatures, a.powers, a.base.shots, a.base.seed, mask);
    std::string csv = format_sweep_csv(points);
    ArtifactWriter w(a.base.out, manifest);
    w.write("sweep_2d.csv", csv);
    w.finish(elapsed_since(start));
    out << csv;
    return kExitOk;
}

int cmd_sweep_adiabatic(const SweepArgs &a, std::ostream &out, std::ostream &err) {
    auto start = std::chrono::steady_clock::now();
    RunManifest manifest;
    manifest.command = "sweep adiabatic";
    LoadedSystem s = load_and_optimize(a.base, manifest, err);
    auto points = adiabatic_trace(s.params, s.gate.gate, a.powers, a.base.shots, a.base.seed);
    std::string csv = format_trace_csv(points);
    ArtifactWriter w(a.base.out, manifest);
    w.write("adiabatic_trace.csv", csv);
    w.finish(elapsed_since(start));
    out << csv;
    return kExitOk;
}

// ----------------------------------------------------------------- laser ---

ServoBump parse_bump(const std::string &text) {
    std::vector<double> v;
    std::stringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stod(cell, &used));
            if (used != cell.size()) {
                throw std::invalid_argument("");
            }
        } catch (const std::exception &) {
            throw std::invalid_argument("--bump expects height,center,width; got '" + text + "'");
        }
    }
    if (v.size() != 3) {
        throw std::invalid_argument("--bump expects height,center,width; got '" + text + "'");
    }
    return ServoBump{v[0], v[1], v[2]};
}

Json model_json(const LaserNoiseModel &m) {
    Json j;
    j["h0"] = m.h0;
    j["bumps"] = Json::array();
    for (const auto &b : m.bumps) {
        j["bumps"].push_back({{"height", b.height}, {"center", b.center}, {"width", b.width}});
    }
    j["dark_floor"] = m.dark_floor;
    j["delay_s"] = m.delay;
    j["scale"] = m.scale;
    return j;
}

LaserNoiseModel model_from_json_file(const std::string &path) {
    std::string text = read_text_file(path);
    Json j;
    try {
        j = Json::parse(text);
        // A fit report nests the model.
        if (j.contains("model")) {
            j = j["model"];
        }
        LaserNoiseModel m;
        m.h0 = j.at("h0").get<double>();
        if (j.contains("bumps")) {
            for (const auto &b : j["bumps"]) {
                m.bumps.push_back(
                    ServoBump{b.at("height").get<double>(), b.at("center").get<double>(), b.at("width").get<double>()});
            }
        }
        m.dark_floor = j.value("dark_floor", 0.0);
        m.delay = j.value("delay_s", 0.0);
        m.scale = j.value("scale", 1.0);
        return m;
    } catch (const nlohmann::json::exception &e) {
        throw DataFormatError("laser model file '" + path + "': " + e.what());
    }
}

struct LaserArgs {
    std::string trace;
    std::string model;
    double h0 = 0.0;
    std::vector<std::string> bumps;
    double delay_s = 0.0;
    double fiber_m = 0.0;
    double group_index = 1.468;
    double dark_floor = -1.0;
    double scale = 1.0;
    bool fix_centers = false;
    bool fix_scale = false;
    bool fix_dark_floor = false;
    std::vector<double> rabi_mhz;
    int half_turns = 2;
    std::string out = ".";
};

LaserNoiseModel model_from_flags(const LaserArgs &a) {
    LaserNoiseModel m;
    if (!a.model.empty()) {
        m = model_from_json_file(a.model);
    } else {
        m.h0 = a.h0;
    }
    for (const auto &b : a.bumps) {
        m.bumps.push_back(parse_bump(b));
    }
    if (a.fiber_m > 0) {
        m.delay = fiber_delay(a.fiber_m, a.group_index);
    } else if (a.delay_s > 0) {
        m.delay = a.delay_s;
    }
    return m;
}

int cmd_laser_fit(const LaserArgs &a, std::ostream &out, std::ostream &err) {
    auto start = std::chrono::steady_clock::now();
    RunManifest manifest;
    manifest.command = "laser fit";
    Trace trace;
    try {
        trace = load_trace(a.trace);
    } catch (const std::invalid_argument &e) {
        throw DataFormatError(e.what());
    }
    manifest.add_input(a.trace);
    LaserNoiseModel initial = model_from_flags(a);
    if (initial.delay <= 0) {
        throw std::invalid_argument("laser fit needs --delay-s or --fiber-m.");
    }
    if (initial.h0 <= 0) {
        throw std::invalid_argument("laser fit needs a positive --h0 starting value.");
    }
    initial.scale = a.scale;
    if (a.dark_floor >= 0) {
        initial.dark_floor = a.dark_floor;
    } else {
        double lo = trace.values.empty() ? 0.0 : trace.values[0];
        for (double v : trace.values) {
            lo = std::min(lo, v);
        }
        initial.dark_floor = std::max(lo, 1e-300);
    }
    HeterodyneFitOptions opts;
    opts.fit_bump_centers = !a.fix_centers;
    opts.fit_scale = !a.fix_scale;
    opts.fit_dark_floor = !a.fix_dark_floor;
    HeterodyneFit fit = fit_heterodyne(trace.freqs, trace.values, initial, opts);

    double rms = 0;
    double worst = 0;
    for (double r : fit.residuals) {
        rms += r * r;
        worst = std::max(worst, std::abs(r));
    }
    rms = fit.residuals.empty() ? 0.0 : std::sqrt(rms / static_cast<double>(fit.residuals.size()));

    Json j;
    j["model"] = model_json(fit.model);
    j["parameters"] = Json::array();
    for (size_t k = 0; k < fit.parameters.size(); k++) {
        j["parameters"].push_back(
            {{"name", fit.parameter_names[k]}, {"value", fit.parameters[k]}, {"standard_error", fit.standard_error(k)}});
    }
    j["chi_square"] = fit.chi_square;
    j["converged"] = fit.converged;
    j["dark_limited"] = fit.dark_limited;
    j["at_bound"] = fit.at_bound;
    j["residual_rms"] = rms;
    j["residual_max_abs"] = worst;

    ArtifactWriter w(a.out, manifest);
    w.write("laser_fit.json", j.dump(2) + "\n");
    w.finish(elapsed_since(start));

    std::string summary = "h0 " + sci(fit.model.h0) + " Hz^2/Hz, relative residual rms " + sci(rms) + ", max " +
                          sci(worst) + "\n";
    if (fit.dark_limited) {
        summary += "warning: trace is dark-floor limited; h0 is an upper bound\n";
    }
    for (const auto &name : fit.at_bound) {
        summary += "warning: " + name + " ended at its bound\n";
    }
    if (!fit.converged) {
        err << "fit did not converge: " << summary;
        return kExitNumerical;
    }
    out << summary;
    return kExitOk;
}

int cmd_laser_rabi_error(const LaserArgs &a, std::ostream &out, std::ostream &) {
    auto start = std::chrono::steady_clock::now();
    RunManifest manifest;
    manifest.command = "laser rabi-error";
    if (!a.model.empty()) {
        manifest.add_input(a.model);
    }
    LaserNoiseModel m = model_from_flags(a);
    std::vector<double> grid = a.rabi_mhz;
    if (grid.empty()) {
        for (int k = 0; k <= 40; k++) {
            grid.push_back(0.1 * std::pow(100.0, k / 40.0));
        }
    }
    std::vector<double> omegas;
    for (double f : grid) {
        omegas.push_back(mhz_to_rad_s(f));
    }
    auto curve = error_vs_rabi_curve(m, omegas, a.half_turns);
    std::string csv = "rabi_mhz,error,white_only_error\n";
    for (size_t k = 0; k < curve.size(); k++) {
        csv += format_double(grid[k]) + "," + format_double(curve[k].error) + "," +
               format_double(curve[k].white_only_error) + "\n";
    }
    ArtifactWriter w(a.out, manifest);
    w.write("rabi_error.csv", csv);
    w.finish(elapsed_since(start));
    out << csv;
    return kExitOk;
}

// --------------------------------------------------------------- analyze ---

struct AnalyzeArgs {
    std::string retention;
    std::string bright;
    double p_ret = -1;
    double p_bb_given_ret = -1;
    double leak = kDefaultLeakage;
    std::vector<std::string> counts;
    std::string data;
    std::string model = "exponential";
    std::string out = ".";
};

Json rb_fit_json(const RbFit &f) {
    return Json{{"amplitude", f.amplitude},
                {"amplitude_error", f.amplitude_error()},
                {"per_gate", f.per_gate},
                {"per_gate_error", f.per_gate_error()},
                {"chi_square", f.chi_square}};
}

int cmd_analyze_rb(const AnalyzeArgs &a, std::ostream &out, std::ostream &) {
    auto start = std::chrono::steady_clock::now();
    RunManifest manifest;
    manifest.command = "analyze rb";
    Json j;
    double p_ret = a.p_ret;
    double p_bb_given_ret = a.p_bb_given_ret;
    if (!a.retention.empty() || !a.bright.empty()) {
        if (a.retention.empty() || a.bright.empty()) {
            throw std::invalid_argument("analyze rb needs both --retention and --bright.");
        }
        RbData ret = parse_rb_csv(read_text_file(a.retention));
        RbData bb = parse_rb_csv(read_text_file(a.bright));
        manifest.add_input(a.retention);
        manifest.add_input(a.bright);
        RbFit fr = fit_geometric_decay(ret.depths, ret.probs, ret.binomial_weights());
        RbFit fb = fit_geometric_decay(bb.depths, bb.probs, bb.binomial_weights());
        j["retention_fit"] = rb_fit_json(fr);
        j["bright_fit"] = rb_fit_json(fb);
        p_ret = fr.per_gate;
        p_bb_given_ret = fb.per_gate / fr.per_gate;
    } else if (p_ret < 0 || p_bb_given_ret < 0) {
        throw std::invalid_argument("analyze rb needs --retention/--bright files or --p-ret and --p-bb-given-ret.");
    }
    CzFidelity f = cz_fidelity(p_ret, p_bb_given_ret, a.leak);
    j["inputs"] = {{"p_ret", p_ret}, {"p_bb_given_ret", p_bb_given_ret}, {"p_leak", a.leak}};
    j["depolarizing"] = f.depolarizing;
    j["fidelity"] = f.fidelity;

    ArtifactWriter w(a.out, manifest);
    w.write("rb.json", j.dump(2) + "\n");
    w.finish(elapsed_since(start));
    out << "P_ret " << fixed(p_ret, 7) << "  P_bb|ret " << fixed(p_bb_given_ret, 7) << "  P_leak " << fixed(a.leak, 4)
        << "\n";
    out << "sigma " << fixed(f.depolarizing, 7) << "  F " << fixed(f.fidelity, 7) << "\n";
    return kExitOk;
}

int cmd_analyze_qnd(const AnalyzeArgs &a, std::ostream &out, std::ostream &) {
    auto start = std::chrono::steady_clock::now();
    RunManifest manifest;
    manifest.command = "analyze qnd";
    if (a.counts.empty()) {
        throw std::invalid_argument("analyze qnd needs at least one --counts file.");
    }
    Json j;
    j["datasets"] = Json::array();
    std::string csv = "dataset,state,mean,std,trials\n";
    std::string text;
    double sum = 0;
    double var = 0;
    for (const auto &path : a.counts) {
        QndFidelity q = dirichlet_qnd(parse_qnd_csv(read_text_file(path)));
        manifest.add_input(path);
        Json d;
        d["file"] = path;
        d["states"] = Json::array();
        for (const auto &s : q.states) {
            d["states"].push_back({{"state", s.label}, {"mean", s.mean}, {"std", s.std}, {"trials", s.trials}});
            csv += path + "," + s.label + "," + format_double(s.mean) + "," + format_double(s.std) + "," +
                   std::to_string(s.trials) + "\n";
        }
        d["fqnd"] = {{"mean", q.mean}, {"std", q.std}};
        csv += path + ",aggregate," + format_double(q.mean) + "," + format_double(q.std) + ",\n";
        j["datasets"].push_back(d);
        text += path + ": F_QND = " + fixed(q.mean, 4) + " +- " + fixed(q.std, 4) + "\n";
        sum += q.mean;
        var += q.std * q.std;
    }
    double m = static_cast<double>(a.counts.size());
    if (a.counts.size() > 1) {
        j["average"] = {{"mean", sum / m}, {"std", std::sqrt(var) / m}};
        text += "average: F_QND = " + fixed(sum / m, 4) + " +- " + fixed(std::sqrt(var) / m, 4) + "\n";
    }
    j["uncertainty_method"] = "posterior variances combined as independent";

    ArtifactWriter w(a.out, manifest);
    w.write("qnd.csv", csv);
    w.write("qnd.json", j.dump(2) + "\n");
    w.finish(elapsed_since(start));
    out << text;
    return kExitOk;
}

int cmd_analyze_decay(const AnalyzeArgs &a, std::ostream &out, std::ostream &) {
    auto start = std::chrono::steady_clock::now();
    RunManifest manifest;
    manifest.command = "analyze decay";
    DecayModel model;
    if (a.model == "exponential") {
        model = DecayModel::kExponential;
    } else if (a.model == "gaussian-sinusoid") {
        model = DecayModel::kGaussianSinusoid;
    } else {
        throw std::invalid_argument("--model must be exponential or gaussian-sinusoid.");
    }
    std::vector<double> times;
    std::vector<double> values;
    parse_decay_csv(read_text_file(a.data), times, values);
    manifest.add_input(a.data);
    DecayFit fit = fit_decay_oscillation(times, values, model);
    Json j;
    j["model"] = a.model;
    std::string text;
    for (size_t k = 0; k < fit.names.size(); k++) {
        j["parameters"][fit.names[k]] = {{"value", fit.values[k]}, {"error", fit.errors[k]}};
        text += fit.names[k] + " " + sci(fit.values[k]) + " +- " + sci(fit.errors[k]) + "\n";
    }
    j["chi_square"] = fit.chi_square;
    ArtifactWriter w(a.out, manifest);
    w.write("decay.json", j.dump(2) + "\n");
    w.finish(elapsed_since(start));
    out << text;
    return kExitOk;
}

// ------------------------------------------------------------------- qnd ---

struct QndArgs {
    std::string circuit;
    NoiseChannelParams noise;
    std::string mode = "two-qubit";
    std::vector<std::string> inputs;
    long shots = 100000;
    uint64_t seed = 1;
    std::string out = ".";
};

int cmd_qnd_simulate(QndArgs a, std::ostream &out, std::ostream &) {
    auto start = std::chrono::steady_clock::now();
    RunManifest manifest;
    manifest.command = "qnd simulate";
    manifest.seed = a.seed;
    manifest.shots = a.shots;
    if (a.mode == "two-qubit") {
        a.noise.mode = DepolarizingMode::kTwoQubit;
    } else if (a.mode == "one-qubit") {
        a.noise.mode = DepolarizingMode::kOneQubitEach;
    } else {
        throw std::invalid_argument("--depolarizing-mode must be two-qubit or one-qubit.");
    }
    if (a.shots <= 0) {
        throw std::invalid_argument("--shots must be positive.");
    }
    a.noise.validate();
    PlaquetteCircuit c = load_circuit(a.circuit);
    manifest.add_input(a.circuit);
    std::vector<BasisInput> inputs = a.inputs.empty() ? default_inputs(c) : a.inputs;

    std::string csv = "input,outcome,count,exact_probability,expected\n";
    Json j;
    j["circuit"] = a.circuit;
    j["noise"] = {{"depolarizing", a.noise.depolarizing},
                  {"leak", a.noise.leak},
                  {"loss", a.noise.loss},
                  {"spam", a.noise.spam},
                  {"depolarizing_mode", a.mode}};
    j["inputs"] = Json::array();
    std::string text;
    double sampled_total = 0;
    for (size_t k = 0; k < inputs.size(); k++) {
        const auto &in = inputs[k];
        int ideal = ideal_outcome(c, in);
        OutcomeDistribution exact = exact_distribution(c, a.noise, in);
        std::vector<long> hist = sample_histogram(c, a.noise, in, a.shots, a.seed + k);
        for (size_t o = 0; o < hist.size(); o++) {
            csv += in + "," + outcome_label(c, static_cast<int>(o)) + "," + std::to_string(hist[o]) + "," +
                   format_double(exact.probabilities[o]) + "," + (static_cast<int>(o) == ideal ? "1" : "0") + "\n";
        }
        double sampled = static_cast<double>(hist[ideal]) / static_cast<double>(a.shots);
        sampled_total += sampled;
        j["inputs"].push_back({{"input", in},
                               {"expected_outcome", outcome_label(c, ideal)},
                               {"exact_correct", exact.probabilities[ideal]},
                               {"sampled_correct", sampled},
                               {"loss_or_leak", exact.loss_or_leak}});
        text += in + " -> " + outcome_label(c, ideal) + "  exact " + fixed(exact.probabilities[ideal], 5) +
                "  sampled " + fixed(sampled, 5) + "\n";
    }
    double predicted = predicted_fqnd(c, a.noise, inputs);
    double sampled = sampled_total / static_cast<double>(inputs.size());
    j["predicted_fqnd"] = predicted;
    j["sampled_fqnd"] = sampled;
    text += "predicted F_QND " + fixed(predicted, 5) + "  sampled " + fixed(sampled, 5) + "\n";

    ArtifactWriter w(a.out, manifest);
    w.write("qnd_histogram.csv", csv);
    w.write("qnd_simulate.json", j.dump(2) + "\n");
    w.finish(elapsed_since(start));
    out << text;
    return kExitOk;
}

void add_budget_flags(CLI::App *cmd, BudgetArgs &a, long default_shots) {
    a.shots = default_shots;
    cmd->add_option("--config", a.config, "System parameter file")->required();
    cmd->add_option("--shots", a.shots, "Monte Carlo shots")->capture_default_str();
    cmd->add_option("--seed", a.seed, "Random seed")->capture_default_str();
    cmd->add_option("--out", a.out, "Output directory")->capture_default_str();
    cmd->add_option("--restarts", a.restarts, "Optimizer restarts")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Rydberg CZ gate error budgets, laser noise and QND analysis", "rydsim"};
    app.require_subcommand(1);

    BudgetArgs budget_run;
    BudgetArgs budget_exclude;
    SweepArgs sweep_2d;
    SweepArgs sweep_adiabatic;
    sweep_adiabatic.powers = {2.8, 5, 10, 20, 40};
    LaserArgs laser_fit;
    LaserArgs laser_rabi;
    AnalyzeArgs analyze_rb;
    AnalyzeArgs analyze_qnd;
    AnalyzeArgs analyze_decay;
    QndArgs qnd_sim;

    auto *budget = app.add_subcommand("budget", "Monte Carlo CZ error budget");
    budget->require_subcommand(1);
    auto *c_run = budget->add_subcommand("run", "Total error for one mechanism mask");
    add_budget_flags(c_run, budget_run, 10000);
    c_run->add_option("--mask", budget_run.mask, "Mechanisms on: all, noiseless, all-a,b or a,b")->capture_default_str();
    auto *c_exclude = budget->add_subcommand("exclude", "Per-mechanism exclusion table");
    add_budget_flags(c_exclude, budget_exclude, 10000);

    auto *sweep = app.add_subcommand("sweep", "Error versus trap conditions");
    sweep->require_subcommand(1);
    auto *c_2d = sweep->add_subcommand("2d", "Temperature x power grid");
    add_budget_flags(c_2d, sweep_2d.base, 500);
    c_2d->add_option("--temperatures", sweep_2d.temperatures, "Temperatures, uK")->delimiter(',')->capture_default_str();
    c_2d->add_option("--powers", sweep_2d.powers, "Trap powers per site, mW")->delimiter(',')->capture_default_str();
    c_2d->add_option("--mask", sweep_2d.base.mask, "Mechanisms on")->capture_default_str();
    auto *c_adiabatic = sweep->add_subcommand("adiabatic", "Error along the adiabatic cooling curve");
    add_budget_flags(c_adiabatic, sweep_adiabatic.base, 1000);
    c_adiabatic->add_option("--powers", sweep_adiabatic.powers, "Trap powers per site, mW")
        ->delimiter(',')
        ->capture_default_str();

    auto *laser = app.add_subcommand("laser", "Laser frequency noise");
    laser->require_subcommand(1);
    auto *c_fit = laser->add_subcommand("fit", "Fit a self-heterodyne trace");
    c_fit->add_option("--trace", laser_fit.trace, "Two-column trace: frequency (Hz), PSD")->required();
    c_fit->add_option("--h0", laser_fit.h0, "Starting white level, Hz^2/Hz");
    c_fit->add_option("--bump", laser_fit.bumps, "Starting servo bump height,center,width (repeatable)");
    c_fit->add_option("--delay-s", laser_fit.delay_s, "Fiber delay, s");
    c_fit->add_option("--fiber-m", laser_fit.fiber_m, "Fiber length, m");
    c_fit->add_option("--group-index", laser_fit.group_index, "Fiber group index")->capture_default_str();
    c_fit->add_option("--dark-floor", laser_fit.dark_floor, "Starting dark floor (default: trace minimum)");
    c_fit->add_option("--scale", laser_fit.scale, "Starting trace scale")->capture_default_str();
    c_fit->add_flag("--fix-centers", laser_fit.fix_centers, "Hold bump centers");
    c_fit->add_flag("--fix-scale", laser_fit.fix_scale, "Hold the trace scale");
    c_fit->add_flag("--fix-dark-floor", laser_fit.fix_dark_floor, "Hold the dark floor");
    c_fit->add_option("--out", laser_fit.out, "Output directory")->capture_default_str();
    auto *c_rabi = laser->add_subcommand("rabi-error", "Rotation error versus Rabi frequency");
    c_rabi->add_option("--model", laser_rabi.model, "Model JSON (a laser fit report works)");
    c_rabi->add_option("--h0", laser_rabi.h0, "White level, Hz^2/Hz");
    c_rabi->add_option("--bump", laser_rabi.bumps, "Servo bump height,center,width (repeatable)");
    c_rabi->add_option("--rabi-mhz", laser_rabi.rabi_mhz, "Rabi frequencies Omega0/2pi, MHz")->delimiter(',');
    c_rabi->add_option("--half-turns", laser_rabi.half_turns, "Rotation angle in units of pi")->capture_default_str();
    c_rabi->add_option("--out", laser_rabi.out, "Output directory")->capture_default_str();

    auto *analyze = app.add_subcommand("analyze", "Experimental data analysis");
    analyze->require_subcommand(1);
    auto *c_rb = analyze->add_subcommand("rb", "CZ fidelity from benchmarking decays");
    c_rb->add_option("--retention", analyze_rb.retention, "Retention CSV: depth,probability,shots");
    c_rb->add_option("--bright", analyze_rb.bright, "Bright-bright CSV: depth,probability,shots");
    c_rb->add_option("--p-ret", analyze_rb.p_ret, "Per-gate retention (instead of files)");
    c_rb->add_option("--p-bb-given-ret", analyze_rb.p_bb_given_ret, "Per-gate bright given retention");
    c_rb->add_option("--leak", analyze_rb.leak, "Leakage probability")->capture_default_str();
    c_rb->add_option("--out", analyze_rb.out, "Output directory")->capture_default_str();
    auto *c_qnd = analyze->add_subcommand("qnd", "QND fidelity from outcome counts");
    c_qnd->add_option("--counts", analyze_qnd.counts, "CSV: state,correct,incorrect (repeatable)")->required();
    c_qnd->add_option("--out", analyze_qnd.out, "Output directory")->capture_default_str();
    auto *c_decay = analyze->add_subcommand("decay", "Decay or damped oscillation fit");
    c_decay->add_option("--data", analyze_decay.data, "CSV: time,value")->required();
    c_decay->add_option("--model", analyze_decay.model, "exponential or gaussian-sinusoid")->capture_default_str();
    c_decay->add_option("--out", analyze_decay.out, "Output directory")->capture_default_str();

    auto *qnd = app.add_subcommand("qnd", "Plaquette QND circuits");
    qnd->require_subcommand(1);
    auto *c_sim = qnd->add_subcommand("simulate", "Outcome histograms and predicted F_QND");
    c_sim->add_option("--circuit", qnd_sim.circuit, "Circuit file")->required();
    c_sim->add_option("--depolarizing", qnd_sim.noise.depolarizing, "Per-CZ depolarizing probability");
    c_sim->add_option("--leak", qnd_sim.noise.leak, "Per-CZ leakage probability");
    c_sim->add_option("--loss", qnd_sim.noise.loss, "Per-CZ loss probability");
    c_sim->add_option("--spam", qnd_sim.noise.spam, "Readout flip probability, one value or one per qubit")
        ->delimiter(',');
    c_sim->add_option("--depolarizing-mode", qnd_sim.mode, "two-qubit or one-qubit")->capture_default_str();
    c_sim->add_option("--input", qnd_sim.inputs, "Input bitstring (repeatable; default all data inputs)");
    c_sim->add_option("--shots", qnd_sim.shots, "Shots per input")->capture_default_str();
    c_sim->add_option("--seed", qnd_sim.seed, "Random seed")->capture_default_str();
    c_sim->add_option("--out", qnd_sim.out, "Output directory")->capture_default_str();

    std::vector<std::string> argv_storage{"rydsim"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &s : argv_storage) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_run->parsed()) return cmd_budget_run(budget_run, out, err);
        if (c_exclude->parsed()) return cmd_budget_exclude(budget_exclude, out, err);
        if (c_2d->parsed()) return cmd_sweep_2d(sweep_2d, out, err);
        if (c_adiabatic->parsed()) return cmd_sweep_adiabatic(sweep_adiabatic, out, err);
        if (c_fit->parsed()) return cmd_laser_fit(laser_fit, out, err);
        if (c_rabi->parsed()) return cmd_laser_rabi_error(laser_rabi, out, err);
        if (c_rb->parsed()) return cmd_analyze_rb(analyze_rb, out, err);
        if (c_qnd->parsed()) return cmd_analyze_qnd(analyze_qnd, out, err);
        if (c_decay->parsed()) return cmd_analyze_decay(analyze_decay, out, err);
        if (c_sim->parsed()) return cmd_qnd_simulate(qnd_sim, out, err);
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DataFormatError &e) {
        err << "data format error: " << e.what() << "\n";
        return kExitDataFormat;
    } catch (const CircuitError &e) {
        err << "circuit format error: " << e.what() << "\n";
        return kExitDataFormat;
    } catch (const std::invalid_argument &e) {
        err << "invalid argument: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        // Fit, quadrature, Monte Carlo and optimizer failures.
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace rydsim
