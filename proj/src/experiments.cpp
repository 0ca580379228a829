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
#include "shadowguard/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "shadowguard/qfim.hpp"

namespace shadowguard {

namespace {

constexpr std::uint64_t kModelStream = 0x6d6f64656cULL; // "model"
constexpr std::uint64_t kSeedStream = 0x73656564ULL;    // "seed"

Rng per_seed_rng(std::uint64_t master, int seed_index) {
    return Rng(master).derive(kSeedStream ^
                              static_cast<std::uint64_t>(seed_index));
}

} // namespace

BuiltModel build_model(const ModelSpec& spec, Rng& rng) {
    if (spec.name == "heisenberg-chain") {
        Graph graph = chain_graph(spec.n_qubits);
        ObservableSum h = heisenberg_graph(graph, spec.coupling, spec.field);
        return {std::move(h), std::move(graph), true};
    }
    if (spec.name == "heisenberg-ring") {
        Graph graph = ring_graph(spec.n_qubits);
        ObservableSum h = heisenberg_graph(graph, spec.coupling, spec.field);
        return {std::move(h), std::move(graph), true};
    }
    if (spec.name == "heisenberg-graph") {
        Graph graph =
            random_regular_graph(spec.n_qubits, spec.graph_degree, rng);
        ObservableSum h = heisenberg_graph(graph, spec.coupling, spec.field);
        return {std::move(h), std::move(graph), true};
    }
    if (spec.name == "ising") {
        return {ising_chain(spec.n_qubits, spec.coupling), Graph{}, false};
    }
    if (spec.name == "syk") {
        return {syk_hamiltonian(spec.n_qubits, spec.coupling, rng), Graph{},
                false};
    }
    throw std::invalid_argument("build_model: unknown model '" + spec.name +
                                "'");
}

std::vector<VarianceScanRow> run_bp_scan(const BpScanConfig& config) {
    std::vector<int> depths = config.depths;
    if (depths.empty()) {
        for (int p = 1; p <= 60; ++p) {
            depths.push_back(p);
        }
    }
    const PauliTerm zz(1.0, {{0, Pauli::Z}, {1, Pauli::Z}});
    return gradient_variance_scan(zz, depths, config.sizes, config.n_seeds,
                                  config.seed);
}

std::vector<SmallAngleRow> run_small_angle_scan(
    const SmallAngleConfig& config) {
    if (config.depths.empty() || config.eps_values.empty()) {
        throw std::invalid_argument("small-angle scan: empty grid");
    }
    const int p_max =
        *std::max_element(config.depths.begin(), config.depths.end());
    const Region region = Region::first_k(config.region_k);
    const Rng master(config.seed);

    std::vector<SmallAngleRow> rows;
    rows.reserve(config.eps_values.size() * config.depths.size() *
                 config.n_seeds);
    for (double eps : config.eps_values) {
        for (int s = 0; s < config.n_seeds; ++s) {
            // Same circuit/angle stream for every eps at a given seed.
            Rng rng = per_seed_rng(config.seed, s);
            const CircuitSpec circuit =
                build_circuit(config.n_qubits, p_max, rng);
            const Params params = init_small_angle(circuit, eps, rng);

            Statevector state = Statevector::zero_state(config.n_qubits);
            const auto sequence = build_gate_sequence(circuit);
            const std::size_t gates_per_layer = sequence.size() / p_max;
            std::size_t g = 0;
            for (int layer = 1; layer <= p_max; ++layer) {
                for (std::size_t i = 0; i < gates_per_layer; ++i, ++g) {
                    const GateOp& op = sequence[g];
                    if (op.kind == GateOp::Kind::Rotation) {
                        apply_rotation(state, op.qubit, op.axis,
                                       params.angles[op.param_index]);
                    } else {
                        apply_cz(state, op.qubit, op.q2);
                    }
                }
                if (std::find(config.depths.begin(), config.depths.end(),
                              layer) != config.depths.end()) {
                    rows.push_back(
                        {eps, layer, s, renyi2_exact(state, region)});
                }
            }
        }
    }
    return rows;
}

std::vector<std::vector<double>> small_angle_means(
    const SmallAngleConfig& config, const std::vector<SmallAngleRow>& rows) {
    std::vector<std::vector<double>> means(
        config.eps_values.size(),
        std::vector<double>(config.depths.size(), 0.0));
    std::vector<std::vector<int>> counts(
        config.eps_values.size(), std::vector<int>(config.depths.size(), 0));
    for (const auto& row : rows) {
        const auto e = std::find(config.eps_values.begin(),
                                 config.eps_values.end(), row.eps_theta) -
                       config.eps_values.begin();
        const auto d = std::find(config.depths.begin(), config.depths.end(),
                                 row.depth) -
                       config.depths.begin();
        means[e][d] += row.s2;
        counts[e][d] += 1;
    }
    for (std::size_t e = 0; e < means.size(); ++e) {
        for (std::size_t d = 0; d < means[e].size(); ++d) {
            means[e][d] /= counts[e][d];
        }
    }
    return means;
}

std::vector<StepBoundRow> run_step_bound(const StepBoundConfig& config) {
    Rng master(config.seed);
    Rng model_rng = master.derive(kModelStream);
    const BuiltModel model = build_model(
        [&] {
            ModelSpec spec = config.model;
            spec.n_qubits = config.n_qubits;
            return spec;
        }(),
        model_rng);
    const Region region = Region::first_k(config.region_k);
    const WbpConfig wbp_free =
        WbpConfig::make(1.0, region, config.n_qubits);

    std::vector<StepBoundRow> rows;
    rows.reserve(config.n_seeds * config.etas.size());
    for (int s = 0; s < config.n_seeds; ++s) {
        Rng rng = per_seed_rng(config.seed, s);
        const CircuitSpec circuit =
            build_circuit(config.n_qubits, config.depth, rng);
        Params params = init_small_angle(circuit, config.eps_theta, rng);
        // Redraw until the starting point is outside the (alpha = 1) WBP.
        int guard = 0;
        while (wbp_check(renyi2_exact(prepare_state(circuit, params), region),
                         wbp_free)) {
            if (++guard > 100) {
                throw std::runtime_error(
                    "step-bound: no WBP-free initialization");
            }
            params = init_small_angle(circuit, config.eps_theta, rng);
        }

        const Statevector state = prepare_state(circuit, params);
        const std::vector<double> gradient = exact_gradient_from_state(
            circuit, params, model.hamiltonian, state);
        const double grad_norm = l2_norm(gradient);
        const double quad = qfim_quadratic_form(circuit, params, gradient);
        const DensityMatrix rho_before = reduced_density_matrix(state, region);
        const double purity_before = rho_before.entries.squaredNorm();

        for (double eta : config.etas) {
            const Params stepped = gd_step(params, gradient, eta);
            const Statevector after = prepare_state(circuit, stepped);
            const DensityMatrix rho_after =
                reduced_density_matrix(after, region);
            const double t_exact = trace_distance(rho_before, rho_after);
            StepBoundRow row;
            row.seed = s;
            row.eta = eta;
            row.grad_norm = grad_norm;
            row.trace_distance_exact = t_exact;
            row.delta_purity =
                std::abs(rho_after.entries.squaredNorm() - purity_before);
            row.purity_bound = purity_change_bound(t_exact, config.region_k);
            row.step_bound = 0.5 * eta * std::sqrt(std::max(quad, 0.0));
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<VqeRunResult> run_vqe_experiment(const VqeConfig& config,
                                             BuiltModel* model_out) {
    Rng master(config.seed);
    Rng model_rng = master.derive(kModelStream);
    const BuiltModel model = build_model(config.model, model_rng);
    if (model_out != nullptr) {
        *model_out = model;
    }
    const int n = config.model.n_qubits;
    const Region region = Region::first_k(config.region_k);
    const WbpConfig wbp = WbpConfig::make(config.alpha, region, n);

    OptimizerConfig base;
    base.eta_decay = config.eta_decay;
    base.max_iters = config.max_iters;
    base.max_restarts = config.max_restarts;
    base.convergence_tol = config.convergence_tol;
    base.convergence_window = config.convergence_window;
    base.mode = EstimatorMode::Exact;

    std::vector<VqeRunResult> results;
    results.reserve(config.n_seeds * config.etas.size());
    for (int s = 0; s < config.n_seeds; ++s) {
        for (double eta : config.etas) {
            // Fresh but identical stream per eta: same circuit and init.
            Rng rng = per_seed_rng(config.seed, s);
            OptimizerConfig opt = base;
            opt.eta = eta;

            if (config.layerwise) {
                const CircuitSpec circuit = build_circuit(n, config.depth, rng);
                LayerwiseSchedule schedule{config.layerwise_iters_per_stage};
                results.push_back(
                    {s, eta,
                     run_layerwise(model.hamiltonian, circuit, wbp, opt,
                                   schedule, rng)});
                continue;
            }

            CircuitSpec circuit;
            Initializer initializer;
            if (config.init == "identity-block") {
                circuit = build_identity_block_circuit(n, config.depth, rng);
                initializer = [circuit](Rng& r) {
                    return init_identity_block(circuit, r);
                };
            } else if (config.init == "small-angle") {
                circuit = build_circuit(n, config.depth, rng);
                const double eps = config.eps_theta;
                initializer = [circuit, eps](Rng& r) {
                    return init_small_angle(circuit, eps, r);
                };
            } else {
                throw std::invalid_argument(
                    "run_vqe_experiment: unknown init '" + config.init + "'");
            }
            results.push_back(
                {s, eta,
                 run_wbp_free(model.hamiltonian, circuit, wbp, opt,
                              initializer, rng)});
        }
    }
    return results;
}

GroundTruthResult ground_truth(const ObservableSum& hamiltonian, int n_qubits,
                               const Region& region) {
    const GroundState gs = ground_state_dense(hamiltonian, n_qubits);
    GroundTruthResult out;
    out.energy = gs.energy;
    out.region_k = region.size();
    out.s2_region = renyi2_exact(gs.state, region);
    out.page_value = page_entropy_asymptotic(region.size(), n_qubits);
    out.ratio = out.s2_region / out.page_value;
    return out;
}

} // namespace shadowguard
