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

#include "rydsim/qnd/circuit.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "rydsim/util/units.h"

namespace rydsim {

namespace {

bool parse_plain(const std::string &s, double &out) {
    if (s.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

}  // namespace

double parse_angle(const std::string &text) {
    std::string s = text;
    double sign = 1.0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        sign = s[0] == '-' ? -1.0 : 1.0;
        s = s.substr(1);
    }
    double divisor = 1.0;
    size_t slash = s.find('/');
    if (slash != std::string::npos) {
        if (!parse_plain(s.substr(slash + 1), divisor) || divisor == 0) {
            throw std::invalid_argument("bad angle '" + text + "'");
        }
        s = s.substr(0, slash);
    }
    double value = 0.0;
    if (s == "pi") {
        value = kPi;
    } else if (s.size() > 3 && s.ends_with("*pi")) {
        if (!parse_plain(s.substr(0, s.size() - 3), value)) {
            throw std::invalid_argument("bad angle '" + text + "'");
        }
        value *= kPi;
    } else if (!parse_plain(s, value)) {
        throw std::invalid_argument("bad angle '" + text + "'");
    }
    return sign * value / divisor;
}

int PlaquetteCircuit::index_of(const std::string &name) const {
    for (size_t k = 0; k < qubits.size(); k++) {
        if (qubits[k].name == name) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

std::vector<int> PlaquetteCircuit::data_qubits() const {
    std::vector<int> out;
    for (size_t k = 0; k < qubits.size(); k++) {
        if (qubits[k].role == QubitRole::kData) {
            out.push_back(static_cast<int>(k));
        }
    }
    return out;
}

void PlaquetteCircuit::validate() const {
    if (qubits.empty() || qubits.size() > static_cast<size_t>(kMaxCircuitQubits)) {
        throw CircuitError("circuit needs between 1 and 4 qubits");
    }
    for (const auto &g : gates) {
        if (g.kind == GateKind::kCz) {
            if (g.targets.size() != 2 || g.targets[0] == g.targets[1]) {
                throw CircuitError("CZ needs two distinct qubits");
            }
            bool a = qubits[g.targets[0]].role == QubitRole::kAncilla;
            bool b = qubits[g.targets[1]].role == QubitRole::kAncilla;
            if (a == b) {
                throw CircuitError(
                    "CZ " + qubits[g.targets[0]].name + " " + qubits[g.targets[1]].name +
                    " must pair one data qubit with one ancilla");
            }
        }
    }
    if (measured.empty()) {
        throw CircuitError("circuit measures no qubits");
    }
}

PlaquetteCircuit parse_circuit(const std::string &text) {
    PlaquetteCircuit c;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    auto fail = [&](const std::string &msg) { throw CircuitError("line " + std::to_string(number) + ": " + msg); };
    auto qubit_arg = [&](const std::string &name) {
        int k = c.index_of(name);
        if (k < 0) {
            fail("unknown qubit '" + name + "'");
        }
        return k;
    };
    auto angle_arg = [&](const std::string &s) {
        try {
            return parse_angle(s);
        } catch (const std::invalid_argument &e) {
            fail(e.what());
        }
        return 0.0;
    };
    while (std::getline(in, line)) {
        number++;
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        std::istringstream row(line);
        std::vector<std::string> tok;
        std::string t;
        while (row >> t) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        const std::string &op = tok[0];
        if (op == "qubit") {
            if (tok.size() < 3 || tok.size() > 4) {
                fail("expected 'qubit <name> <species> [data|ancilla]'");
            }
            if (c.index_of(tok[1]) >= 0) {
                fail("qubit '" + tok[1] + "' declared twice");
            }
            Qubit q{tok[1], tok[2], QubitRole::kData};
            if (tok.size() == 4) {
                if (tok[3] == "ancilla") {
                    q.role = QubitRole::kAncilla;
                } else if (tok[3] != "data") {
                    fail("qubit role must be 'data' or 'ancilla'");
                }
            }
            if (c.qubits.size() >= static_cast<size_t>(kMaxCircuitQubits)) {
                fail("at most 4 qubits are supported");
            }
            c.qubits.push_back(q);
        } else if (op == "R") {
            if (tok.size() != 4) {
                fail("expected 'R <species> <theta> <phi>'");
            }
            bool known = std::any_of(c.qubits.begin(), c.qubits.end(), [&](const Qubit &q) { return q.species == tok[1]; });
            if (!known) {
                fail("no qubit of species '" + tok[1] + "'");
            }
            CircuitGate g;
            g.kind = GateKind::kGlobalRotation;
            g.species = tok[1];
            for (size_t k = 0; k < c.qubits.size(); k++) {
                if (c.qubits[k].species == tok[1]) {
                    g.targets.push_back(static_cast<int>(k));
                }
            }
            g.theta = angle_arg(tok[2]);
            g.phi = angle_arg(tok[3]);
            c.gates.push_back(g);
        } else if (op == "RZ") {
            if (tok.size() != 3) {
                fail("expected 'RZ <qubit> <theta>'");
            }
            CircuitGate g;
            g.kind = GateKind::kRz;
            g.targets = {qubit_arg(tok[1])};
            g.theta = angle_arg(tok[2]);
            c.gates.push_back(g);
        } else if (op == "CZ") {
            if (tok.size() != 3) {
                fail("expected 'CZ <qubit> <qubit>'");
            }
            CircuitGate g;
            g.kind = GateKind::kCz;
            g.targets = {qubit_arg(tok[1]), qubit_arg(tok[2])};
            c.gates.push_back(g);
        } else if (op == "measure") {
            if (tok.size() < 2) {
                fail("expected 'measure <qubit>...'");
            }
            for (size_t k = 1; k < tok.size(); k++) {
                int q = qubit_arg(tok[k]);
                if (std::find(c.measured.begin(), c.measured.end(), q) != c.measured.end()) {
                    fail("qubit '" + tok[k] + "' measured twice");
                }
                c.measured.push_back(q);
            }
        } else {
            fail("unknown instruction '" + op + "'");
        }
    }
    try {
        c.validate();
    } catch (const CircuitError &e) {
        throw CircuitError(std::string("circuit: ") + e.what());
    }
    return c;
}

PlaquetteCircuit load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw CircuitError("cannot open circuit file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_circuit(buffer.str());
}

PlaquetteCircuit parity_check_circuit(const std::string &ancilla_species, const std::vector<std::string> &data_species) {
    for (const auto &s : data_species) {
        if (s == ancilla_species) {
            throw std::invalid_argument("global rotations need the ancilla to be the only qubit of its species.");
        }
    }
    PlaquetteCircuit c;
    c.qubits.push_back({"a", ancilla_species, QubitRole::kAncilla});
    for (size_t k = 0; k < data_species.size(); k++) {
        c.qubits.push_back({"d" + std::to_string(k), data_species[k], QubitRole::kData});
    }
    CircuitGate open{GateKind::kGlobalRotation, ancilla_species, {0}, kPi / 2, kPi / 2};
    CircuitGate close{GateKind::kGlobalRotation, ancilla_species, {0}, kPi / 2, -kPi / 2};
    c.gates.push_back(open);
    for (size_t k = 0; k < data_species.size(); k++) {
        c.gates.push_back({GateKind::kCz, "", {0, static_cast<int>(k + 1)}, 0, 0});
    }
    c.gates.push_back(close);
    for (size_t k = 0; k < c.qubits.size(); k++) {
        c.measured.push_back(static_cast<int>(k));
    }
    c.validate();
    return c;
}

}  // namespace rydsim
