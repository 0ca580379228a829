// Copyright 2026 The Shadowguard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "shadowguard/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace shadowguard {

namespace {

void reject_unknown_keys(const Json& j, const std::set<std::string>& known,
                         const char* where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (known.find(key) == known.end()) {
            throw std::invalid_argument(std::string(where) +
                                        ": unknown config key '" + key + "'");
        }
    }
}

template <typename T>
void maybe(const Json& j, const char* key, T& out) {
    if (j.contains(key)) {
        out = j.at(key).get<T>();
    }
}

} // namespace

std::string pauli_string(const PauliTerm& term) {
    return term.support_string();
}

PauliTerm parse_pauli_string(const std::string& text, double coefficient) {
    std::vector<std::pair<int, Pauli>> support;
    std::istringstream stream(text);
    std::string token;
    while (stream >> token) {
        if (token.size() < 2) {
            throw std::invalid_argument("parse_pauli_string: bad token '" +
                                        token + "'");
        }
        const Pauli p = pauli_from_char(token[0]);
        const int qubit = std::stoi(token.substr(1));
        support.emplace_back(qubit, p);
    }
    return PauliTerm(coefficient, std::move(support));
}

Json to_json(const ObservableSum& obs) {
    Json terms = Json::array();
    for (const auto& term : obs.terms()) {
        terms.push_back({{"coefficient", term.coefficient.real()},
                         {"paulis", term.support_string()}});
    }
    return Json{{"terms", terms}};
}

ObservableSum observable_from_json(const Json& j) {
    std::vector<PauliTerm> terms;
    for (const auto& entry : j.at("terms")) {
        terms.push_back(
            parse_pauli_string(entry.at("paulis").get<std::string>(),
                               entry.at("coefficient").get<double>()));
    }
    return ObservableSum(std::move(terms));
}

Json to_json(const Graph& graph) {
    Json edges = Json::array();
    for (const auto& [a, b] : graph.edges) {
        edges.push_back({a, b});
    }
    return Json{{"n_vertices", graph.n_vertices}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return Graph(j.at("n_vertices").get<int>(), std::move(edges));
}

Json to_json(const CircuitSpec& circuit) {
    Json axes = Json::array();
    for (int layer = 0; layer < circuit.depth; ++layer) {
        std::string row;
        for (int q = 0; q < circuit.n_qubits; ++q) {
            row += pauli_char(circuit.axis(layer, q));
        }
        axes.push_back(row);
    }
    return Json{{"n_qubits", circuit.n_qubits},
                {"depth", circuit.depth},
                {"mirror_second_half", circuit.mirror_second_half},
                {"axes", axes}};
}

CircuitSpec circuit_from_json(const Json& j) {
    CircuitSpec circuit;
    circuit.n_qubits = j.at("n_qubits").get<int>();
    circuit.depth = j.at("depth").get<int>();
    circuit.mirror_second_half = j.value("mirror_second_half", false);
    const auto& axes = j.at("axes");
    for (const auto& row : axes) {
        const std::string text = row.get<std::string>();
        if (static_cast<int>(text.size()) != circuit.n_qubits) {
            throw std::invalid_argument("circuit_from_json: bad axes row");
        }
        for (char c : text) {
            circuit.axes.push_back(pauli_from_char(c));
        }
    }
    circuit.validate();
    return circuit;
}

Json to_json(const Params& params) {
    Json angles = Json::array();
    for (int layer = 0; layer < params.depth; ++layer) {
        Json row = Json::array();
        for (int q = 0; q < params.n_qubits; ++q) {
            row.push_back(params.at(layer, q));
        }
        angles.push_back(row);
    }
    return Json{{"n_qubits", params.n_qubits},
                {"depth", params.depth},
                {"angles", angles}};
}

Params params_from_json(const Json& j) {
    Params params;
    params.n_qubits = j.at("n_qubits").get<int>();
    params.depth = j.at("depth").get<int>();
    for (const auto& row : j.at("angles")) {
        for (const auto& angle : row) {
            params.angles.push_back(angle.get<double>());
        }
    }
    if (params.angles.size() !=
        static_cast<std::size_t>(params.depth) * params.n_qubits) {
        throw std::invalid_argument("params_from_json: bad angle shape");
    }
    return params;
}

Json to_json(const ShadowSet& shadows) {
    Json snapshots = Json::array();
    for (std::size_t t = 0; t < shadows.size(); ++t) {
        const auto snap = shadows.snapshot(t);
        std::string text;
        text.reserve(2 * snap.size());
        for (auto code : snap) {
            text += pauli_char(ShadowSet::basis_of(code));
            text += static_cast<char>('0' + ShadowSet::bit_of(code));
        }
        snapshots.push_back(text);
    }
    return Json{{"n_qubits", shadows.n_qubits()},
                {"seed", shadows.seed()},
                {"snapshots", snapshots}};
}

ShadowSet shadow_set_from_json(const Json& j) {
    const int n = j.at("n_qubits").get<int>();
    ShadowSet set(n, j.at("seed").get<std::uint64_t>());
    std::vector<std::uint8_t> codes(n);
    for (const auto& entry : j.at("snapshots")) {
        const std::string text = entry.get<std::string>();
        if (static_cast<int>(text.size()) != 2 * n) {
            throw std::invalid_argument("shadow_set_from_json: bad snapshot");
        }
        for (int q = 0; q < n; ++q) {
            const Pauli basis = pauli_from_char(text[2 * q]);
            const char bit = text[2 * q + 1];
            if (bit != '0' && bit != '1') {
                throw std::invalid_argument(
                    "shadow_set_from_json: bad outcome bit");
            }
            codes[q] = static_cast<std::uint8_t>(
                (static_cast<int>(basis) << 1) | (bit - '0'));
        }
        set.append_raw(codes);
    }
    return set;
}

Json to_json(const RunRecord& record) {
    Json rows = Json::array();
    for (const auto& row : record.rows) {
        rows.push_back({row.iter, row.energy, row.s2, row.grad_norm, row.eta,
                        row.active_layers});
    }
    Json events = Json::array();
    for (const auto& event : record.events) {
        events.push_back({{"iter", event.iter},
                          {"eta_after", event.eta_after},
                          {"restarted", event.restarted}});
    }
    return Json{
        {"columns", {"iter", "energy", "s2", "grad_norm", "eta",
                     "active_layers"}},
        {"rows", rows},
        {"events", events},
        {"converged", record.converged},
        {"stopped_on_restart_cap", record.stopped_on_restart_cap},
        {"best_energy", record.best_energy},
        {"final_energy", record.final_energy},
        {"initial_angles", record.initial_angles},
        {"final_angles", record.final_angles}};
}

Json to_json(const ModelSpec& spec) {
    return Json{{"name", spec.name},
                {"n_qubits", spec.n_qubits},
                {"coupling", spec.coupling},
                {"field", spec.field},
                {"graph_degree", spec.graph_degree}};
}

ModelSpec model_spec_from_json(const Json& j) {
    reject_unknown_keys(
        j, {"name", "n_qubits", "coupling", "field", "graph_degree"},
        "model");
    ModelSpec spec;
    maybe(j, "name", spec.name);
    maybe(j, "n_qubits", spec.n_qubits);
    maybe(j, "coupling", spec.coupling);
    maybe(j, "field", spec.field);
    maybe(j, "graph_degree", spec.graph_degree);
    return spec;
}

BpScanConfig bp_scan_config_from_json(const Json& j) {
    reject_unknown_keys(j, {"sizes", "depths", "n_seeds", "seed"}, "bp-scan");
    BpScanConfig config;
    maybe(j, "sizes", config.sizes);
    maybe(j, "depths", config.depths);
    maybe(j, "n_seeds", config.n_seeds);
    maybe(j, "seed", config.seed);
    return config;
}

Json to_json(const BpScanConfig& config) {
    return Json{{"sizes", config.sizes},
                {"depths", config.depths},
                {"n_seeds", config.n_seeds},
                {"seed", config.seed}};
}

SmallAngleConfig small_angle_config_from_json(const Json& j) {
    reject_unknown_keys(j,
                        {"n_qubits", "eps_values", "depths", "region_k",
                         "n_seeds", "seed"},
                        "small-angle");
    SmallAngleConfig config;
    maybe(j, "n_qubits", config.n_qubits);
    maybe(j, "eps_values", config.eps_values);
    maybe(j, "depths", config.depths);
    maybe(j, "region_k", config.region_k);
    maybe(j, "n_seeds", config.n_seeds);
    maybe(j, "seed", config.seed);
    return config;
}

Json to_json(const SmallAngleConfig& config) {
    return Json{{"n_qubits", config.n_qubits},
                {"eps_values", config.eps_values},
                {"depths", config.depths},
                {"region_k", config.region_k},
                {"n_seeds", config.n_seeds},
                {"seed", config.seed}};
}

StepBoundConfig step_bound_config_from_json(const Json& j) {
    reject_unknown_keys(j,
                        {"n_qubits", "depth", "eps_theta", "etas", "region_k",
                         "n_seeds", "seed", "model"},
                        "step-bound");
    StepBoundConfig config;
    maybe(j, "n_qubits", config.n_qubits);
    maybe(j, "depth", config.depth);
    maybe(j, "eps_theta", config.eps_theta);
    maybe(j, "etas", config.etas);
    maybe(j, "region_k", config.region_k);
    maybe(j, "n_seeds", config.n_seeds);
    maybe(j, "seed", config.seed);
    if (j.contains("model")) {
        config.model = model_spec_from_json(j.at("model"));
    }
    return config;
}

Json to_json(const StepBoundConfig& config) {
    return Json{{"n_qubits", config.n_qubits},
                {"depth", config.depth},
                {"eps_theta", config.eps_theta},
                {"etas", config.etas},
                {"region_k", config.region_k},
                {"n_seeds", config.n_seeds},
                {"seed", config.seed},
                {"model", to_json(config.model)}};
}

VqeConfig vqe_config_from_json(const Json& j) {
    reject_unknown_keys(
        j, {"model", "depth", "init", "eps_theta", "alpha", "region_k",
            "etas", "eta_decay", "max_iters", "max_restarts",
            "convergence_tol", "convergence_window", "layerwise",
            "layerwise_iters_per_stage", "n_seeds", "seed"},
        "vqe");
    VqeConfig config;
    if (j.contains("model")) {
        config.model = model_spec_from_json(j.at("model"));
    }
    maybe(j, "depth", config.depth);
    maybe(j, "init", config.init);
    maybe(j, "eps_theta", config.eps_theta);
    maybe(j, "alpha", config.alpha);
    maybe(j, "region_k", config.region_k);
    maybe(j, "etas", config.etas);
    maybe(j, "eta_decay", config.eta_decay);
    maybe(j, "max_iters", config.max_iters);
    maybe(j, "max_restarts", config.max_restarts);
    maybe(j, "convergence_tol", config.convergence_tol);
    maybe(j, "convergence_window", config.convergence_window);
    maybe(j, "layerwise", config.layerwise);
    maybe(j, "layerwise_iters_per_stage", config.layerwise_iters_per_stage);
    maybe(j, "n_seeds", config.n_seeds);
    maybe(j, "seed", config.seed);
    return config;
}

Json to_json(const VqeConfig& config) {
    return Json{{"model", to_json(config.model)},
                {"depth", config.depth},
                {"init", config.init},
                {"eps_theta", config.eps_theta},
                {"alpha", config.alpha},
                {"region_k", config.region_k},
                {"etas", config.etas},
                {"eta_decay", config.eta_decay},
                {"max_iters", config.max_iters},
                {"max_restarts", config.max_restarts},
                {"convergence_tol", config.convergence_tol},
                {"convergence_window", config.convergence_window},
                {"layerwise", config.layerwise},
                {"layerwise_iters_per_stage",
                 config.layerwise_iters_per_stage},
                {"n_seeds", config.n_seeds},
                {"seed", config.seed}};
}

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows,
               const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("write_csv: cannot open " + path);
    }
    for (const auto& comment : comments) {
        out << "# " << comment << "\n";
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << (i == 0 ? "" : ",") << header[i];
    }
    out << "\n";
    for (const auto& row : rows) {
        if (row.size() != header.size()) {
            throw std::invalid_argument("write_csv: row width mismatch");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i == 0 ? "" : ",") << format_double(row[i]);
        }
        out << "\n";
    }
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("write_text_file: cannot open " + path);
    }
    out << contents;
}

} // namespace shadowguard
