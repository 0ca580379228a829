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
#include "shadowguard/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "shadowguard/shadows.hpp"

namespace shadowguard {

namespace {

struct IterationEstimate {
    double energy = 0.0;
    double s2 = 0.0;
    std::vector<double> gradient;
};

IterationEstimate evaluate_exact(const ObservableSum& problem,
                                 const CircuitSpec& circuit,
                                 const Region& region, const Params& params) {
    IterationEstimate est;
    const Statevector state = prepare_state(circuit, params);
    est.energy = expectation(state, problem);
    est.s2 = renyi2_exact(state, region);
    est.gradient = exact_gradient_from_state(circuit, params, problem, state);
    return est;
}

IterationEstimate evaluate_shadow(const ObservableSum& problem,
                                  const CircuitSpec& circuit,
                                  const Region& region, const Params& params,
                                  const OptimizerConfig& config, Rng& rng) {
    IterationEstimate est;
    // One shadow set serves both the energy and the entropy at theta;
    // every shifted point in the gradient gets fresh tomography.
    const ShadowSet shadows = collect_shadows(
        [&]() { return prepare_state(circuit, params); },
        config.shadow_snapshots, rng);
    est.energy = estimate_energy(shadows, problem);
    est.s2 = estimate_renyi2(shadows, region).value;
    EnergyFn shifted_energy = make_shadow_energy(
        circuit, problem, config.shadow_snapshots_gradient,
        rng.derive(rng.next_u64()));
    est.gradient = parameter_shift_gradient(circuit, params, shifted_energy);
    return est;
}

IterationEstimate evaluate(const ObservableSum& problem,
                           const CircuitSpec& circuit, const Region& region,
                           const Params& params,
                           const OptimizerConfig& config, Rng& rng) {
    if (config.mode == EstimatorMode::Exact) {
        return evaluate_exact(problem, circuit, region, params);
    }
    return evaluate_shadow(problem, circuit, region, params, config, rng);
}

double initial_s2(const CircuitSpec& circuit, const Region& region,
                  const Params& params, const OptimizerConfig& config,
                  Rng& rng) {
    if (config.mode == EstimatorMode::Exact) {
        return renyi2_exact(prepare_state(circuit, params), region);
    }
    const ShadowSet shadows = collect_shadows(
        [&]() { return prepare_state(circuit, params); },
        config.shadow_snapshots, rng);
    return estimate_renyi2(shadows, region).value;
}

} // namespace

WbpConfig WbpConfig::make(double alpha, Region region, int n_qubits) {
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw std::invalid_argument("WbpConfig: alpha must be in (0, 1]");
    }
    WbpConfig config;
    config.alpha = alpha;
    config.n_qubits = n_qubits;
    config.threshold =
        alpha * page_entropy_asymptotic(region.size(), n_qubits);
    config.region = std::move(region);
    return config;
}

bool wbp_check(double s2_nats, const WbpConfig& config) {
    // Exact purities can exceed 1 by rounding, giving S2 ~ -1e-16.
    if (s2_nats < -1e-9) {
        throw std::invalid_argument("wbp_check: entropy must be nonnegative");
    }
    return s2_nats >= config.threshold;
}

int RunRecord::n_restarts() const {
    int count = 0;
    for (const auto& event : events) {
        if (event.restarted) {
            ++count;
        }
    }
    return count;
}

std::optional<int> RunRecord::first_event_iter() const {
    if (events.empty()) {
        return std::nullopt;
    }
    return events.front().iter;
}

RunRecord run_wbp_free(const ObservableSum& problem,
                       const CircuitSpec& circuit, const WbpConfig& wbp,
                       const OptimizerConfig& config,
                       const Initializer& initializer, Rng& rng) {
    circuit.validate();
    if (wbp.n_qubits != circuit.n_qubits) {
        throw std::invalid_argument("run_wbp_free: WBP config size mismatch");
    }

    // Draw a WBP-free starting point.
    Params initial = initializer(rng);
    int attempts = 1;
    while (wbp_check(initial_s2(circuit, wbp.region, initial, config, rng),
                     wbp)) {
        if (attempts >= config.init_retry_cap) {
            throw std::runtime_error(
                "run_wbp_free: no WBP-free initialization within retry cap");
        }
        initial = initializer(rng);
        ++attempts;
    }

    RunRecord record;
    record.initial_angles = initial.angles;
    Params params = initial;
    double eta = config.eta;
    int restarts = 0;
    std::vector<double> segment_energies; // since the last restart

    for (int iter = 1; iter <= config.max_iters; ++iter) {
        const IterationEstimate est =
            evaluate(problem, circuit, wbp.region, params, config, rng);
        record.rows.push_back({iter, est.energy, est.s2,
                               l2_norm(est.gradient), eta, circuit.depth});

        if (wbp_check(est.s2, wbp)) {
            if (restarts >= config.max_restarts) {
                record.events.push_back({iter, eta, true});
                record.stopped_on_restart_cap = true;
                break;
            }
            eta *= config.eta_decay;
            ++restarts;
            record.events.push_back({iter, eta, true});
            params = config.restart_redraw ? initializer(rng) : initial;
            segment_energies.clear();
            continue;
        }

        params = gd_step(params, est.gradient, eta);

        segment_energies.push_back(est.energy);
        if (config.convergence_tol > 0.0 &&
            static_cast<int>(segment_energies.size()) >
                config.convergence_window) {
            const double previous =
                segment_energies[segment_energies.size() - 1 -
                                 config.convergence_window];
            if (std::abs(est.energy - previous) < config.convergence_tol) {
                record.converged = true;
                break;
            }
        }
    }

    record.best_energy = std::numeric_limits<double>::infinity();
    for (const auto& row : record.rows) {
        record.best_energy = std::min(record.best_energy, row.energy);
    }
    record.final_energy =
        record.rows.empty() ? 0.0 : record.rows.back().energy;
    record.final_angles = params.angles;
    return record;
}

RunRecord run_layerwise(const ObservableSum& problem,
                        const CircuitSpec& base_circuit, const WbpConfig& wbp,
                        const OptimizerConfig& config,
                        const LayerwiseSchedule& schedule, Rng& rng) {
    base_circuit.validate();
    if (config.mode != EstimatorMode::Exact) {
        throw std::invalid_argument(
            "run_layerwise: exact estimator mode only");
    }
    if (schedule.iters_per_stage < 1) {
        throw std::invalid_argument("run_layerwise: empty stage schedule");
    }

    RunRecord record;
    const int n = base_circuit.n_qubits;
    // Every stage's new layer starts from full-range random angles; see
    // the header note.
    std::vector<double> angles;
    angles.reserve(static_cast<std::size_t>(base_circuit.depth) * n);
    int iter = 0;
    for (int layers = 1; layers <= base_circuit.depth; ++layers) {
        const CircuitSpec circuit = base_circuit.prefix(layers);
        for (int q = 0; q < n; ++q) {
            angles.push_back(
                rng.uniform(-std::numbers::pi, std::numbers::pi));
        }
        Params params;
        params.n_qubits = n;
        params.depth = layers;
        params.angles = angles;
        if (layers == 1) {
            record.initial_angles = params.angles;
        }

        for (int stage_iter = 0; stage_iter < schedule.iters_per_stage;
             ++stage_iter) {
            ++iter;
            const Statevector state = prepare_state(circuit, params);
            const double energy = expectation(state, problem);
            const double s2 = renyi2_exact(state, wbp.region);
            const std::vector<double> gradient =
                exact_gradient_from_state(circuit, params, problem, state);

            // Only the newest layer's components are optimized; frozen
            // layers stay bit-identical.
            const std::size_t active_begin =
                static_cast<std::size_t>(layers - 1) * n;
            std::vector<double> active(gradient.begin() + active_begin,
                                       gradient.end());
            record.rows.push_back(
                {iter, energy, s2, l2_norm(active), config.eta, layers});
            if (wbp_check(s2, wbp)) {
                record.events.push_back({iter, config.eta, false});
            }
            for (std::size_t i = 0; i < active.size(); ++i) {
                params.angles[active_begin + i] -= config.eta * active[i];
            }
        }
        angles = params.angles;
    }

    record.best_energy = std::numeric_limits<double>::infinity();
    for (const auto& row : record.rows) {
        record.best_energy = std::min(record.best_energy, row.energy);
    }
    record.final_energy =
        record.rows.empty() ? 0.0 : record.rows.back().energy;
    record.final_angles = angles;
    return record;
}

std::vector<VarianceScanRow> gradient_variance_scan(
    const PauliTerm& observable_term, const std::vector<int>& depths,
    const std::vector<int>& system_sizes, int n_seeds, std::uint64_t seed) {
    if (n_seeds < 2) {
        throw std::invalid_argument("gradient_variance_scan: need >= 2 seeds");
    }
    if (depths.empty() || system_sizes.empty()) {
        throw std::invalid_argument("gradient_variance_scan: empty grid");
    }
    const int p_max = *std::max_element(depths.begin(), depths.end());
    const ObservableSum observable =
        ObservableSum::unchecked({observable_term});

    std::vector<VarianceScanRow> rows;
    const Rng master(seed);
    for (int n : system_sizes) {
        const Region region_k2 = Region::first_k(2);
        const Region region_half = Region::first_k(n / 2);
        // grads[d][s], entropies likewise.
        std::vector<std::vector<double>> grads(
            depths.size(), std::vector<double>(n_seeds, 0.0));
        std::vector<std::vector<double>> s2_k2 = grads;
        std::vector<std::vector<double>> s2_half = grads;

        for (int s = 0; s < n_seeds; ++s) {
            Rng seed_rng = master.derive(
                (static_cast<std::uint64_t>(n) << 32) ^
                static_cast<std::uint64_t>(s));
            const CircuitSpec circuit = build_circuit(n, p_max, seed_rng);
            Params params = init_small_angle(circuit, 1.0, seed_rng);

            // Co-evolve the unshifted and the two first-parameter-shifted
            // states; the shift only changes layer 0 on qubit 0.
            Params plus = params;
            plus.angles[0] += 0.5 * std::numbers::pi;
            Params minus = params;
            minus.angles[0] -= 0.5 * std::numbers::pi;

            Statevector mid = Statevector::zero_state(n);
            Statevector hi = Statevector::zero_state(n);
            Statevector lo = Statevector::zero_state(n);

            std::size_t depth_cursor = 0;
            for (int layer = 0; layer < p_max; ++layer) {
                const CircuitSpec layer_circuit = circuit.prefix(layer + 1);
                const auto sequence = build_gate_sequence(layer_circuit);
                // Apply only the new layer's gates.
                const std::size_t gates_per_layer = sequence.size() / (layer + 1);
                for (std::size_t g = sequence.size() - gates_per_layer;
                     g < sequence.size(); ++g) {
                    const GateOp& op = sequence[g];
                    if (op.kind == GateOp::Kind::Rotation) {
                        apply_rotation(mid, op.qubit, op.axis,
                                       params.angles[op.param_index]);
                        apply_rotation(hi, op.qubit, op.axis,
                                       plus.angles[op.param_index]);
                        apply_rotation(lo, op.qubit, op.axis,
                                       minus.angles[op.param_index]);
                    } else {
                        apply_cz(mid, op.qubit, op.q2);
                        apply_cz(hi, op.qubit, op.q2);
                        apply_cz(lo, op.qubit, op.q2);
                    }
                }
                const auto pos = std::find(depths.begin(), depths.end(),
                                           layer + 1);
                if (pos != depths.end()) {
                    const std::size_t d = pos - depths.begin();
                    grads[d][s] = 0.5 * (expectation(hi, observable) -
                                         expectation(lo, observable));
                    s2_k2[d][s] = renyi2_exact(mid, region_k2);
                    s2_half[d][s] = renyi2_exact(mid, region_half);
                    ++depth_cursor;
                }
            }
            (void)depth_cursor;
        }

        for (std::size_t d = 0; d < depths.size(); ++d) {
            double mean = 0.0;
            for (double g : grads[d]) {
                mean += g;
            }
            mean /= n_seeds;
            double var = 0.0;
            for (double g : grads[d]) {
                var += (g - mean) * (g - mean);
            }
            var /= (n_seeds - 1);
            double mk2 = 0.0;
            double mhalf = 0.0;
            for (int s = 0; s < n_seeds; ++s) {
                mk2 += s2_k2[d][s];
                mhalf += s2_half[d][s];
            }
            rows.push_back({n, depths[d], var, mk2 / n_seeds,
                            mhalf / n_seeds});
        }
    }
    return rows;
}

} // namespace shadowguard
