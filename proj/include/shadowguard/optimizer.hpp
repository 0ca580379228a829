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
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shadowguard/circuit.hpp"
#include "shadowguard/entropy.hpp"
#include "shadowguard/gradient.hpp"
#include "shadowguard/pauli.hpp"
#include "shadowguard/rng.hpp"
#include "shadowguard/statevector.hpp"

namespace shadowguard {

/**
 * @brief Weak-barren-plateau monitor: the run is flagged when the second
 * Renyi entropy of the monitored region reaches alpha times the Page
 * value (ties count as flagged; the proceed condition is strict).
 */
struct WbpConfig {
    double alpha = 1.0;
    Region region;
    int n_qubits = 0;
    double threshold = 0.0; // alpha * S_Page(k, N), nats

    static WbpConfig make(double alpha, Region region, int n_qubits);
};

/// True iff s2 >= threshold (the state is in a WBP).
bool wbp_check(double s2_nats, const WbpConfig& config);

enum class EstimatorMode { Exact, Shadow };

struct OptimizerConfig {
    double eta = 0.01;
    double eta_decay = 0.1; // applied on every WBP restart
    int max_restarts = 3;
    int max_iters = 500;
    /// Convergence when |E_t - E_{t-w}| < tol within one restart segment;
    /// tol <= 0 disables the check.
    int convergence_window = 10;
    double convergence_tol = 1e-6;
    EstimatorMode mode = EstimatorMode::Exact;
    /// Shadow mode: snapshots for the joint energy/entropy set at theta.
    std::size_t shadow_snapshots = 2000;
    /// Shadow mode: snapshots per shifted point in the gradient.
    std::size_t shadow_snapshots_gradient = 500;
    /// Restart draws a fresh initialization instead of resetting.
    bool restart_redraw = false;
    int init_retry_cap = 100;
};

struct IterationRow {
    int iter = 0; // 1-based
    double energy = 0.0;
    double s2 = 0.0;
    double grad_norm = 0.0;
    double eta = 0.0;
    int active_layers = 0;
};

struct WbpEvent {
    int iter = 0;
    double eta_after = 0.0;
    bool restarted = true; // false for the layerwise baseline
};

struct RunRecord {
    std::vector<IterationRow> rows;
    std::vector<WbpEvent> events;
    bool converged = false;
    bool stopped_on_restart_cap = false;
    double best_energy = 0.0;
    double final_energy = 0.0;
    std::vector<double> initial_angles;
    std::vector<double> final_angles;

    int n_restarts() const;
    std::optional<int> first_event_iter() const;
};

using Initializer = std::function<Params(Rng&)>;

/**
 * @brief WBP-free gradient descent: evaluate E, grad E and S2 each
 * iteration (exactly or from one shared shadow set); step while the
 * monitored entropy stays below the threshold, otherwise record an event,
 * shrink eta by eta_decay and start again from the initialization.
 *
 * The initializer is re-drawn until it is WBP-free (up to
 * init_retry_cap; failure throws).
 */
RunRecord run_wbp_free(const ObservableSum& problem,
                       const CircuitSpec& circuit, const WbpConfig& wbp,
                       const OptimizerConfig& config,
                       const Initializer& initializer, Rng& rng);

struct LayerwiseSchedule {
    int iters_per_stage = 5;
};

/**
 * @brief Layerwise baseline: grow the circuit one layer at a time, each
 * new layer initialized with full-range random angles, and optimize only
 * the newest layer's angles for a fixed number of iterations. WBP events
 * are recorded but trigger no restart and no eta change. Exact estimator
 * only.
 *
 * New layers must be random rather than zero: all-zero layers are exact
 * stationary points for Hamiltonians with |0...0> as an eigenstate
 * (Heisenberg with a longitudinal field), and zero-initialized CZ rings
 * cancel pairwise, so the baseline would neither move nor entangle.
 */
RunRecord run_layerwise(const ObservableSum& problem,
                        const CircuitSpec& base_circuit, const WbpConfig& wbp,
                        const OptimizerConfig& config,
                        const LayerwiseSchedule& schedule, Rng& rng);

struct VarianceScanRow {
    int n_qubits = 0;
    int depth = 0;
    double var_grad = 0.0;
    double mean_s2_k2 = 0.0;
    double mean_s2_half = 0.0;
};

/**
 * @brief Variance of the first-parameter gradient component over random
 * circuits and full-range random angles, plus mean region entropies, on a
 * grid of depths and system sizes. Exact simulation; the shifted states
 * are co-evolved so every depth checkpoint reuses the same sweep.
 */
std::vector<VarianceScanRow> gradient_variance_scan(
    const PauliTerm& observable_term, const std::vector<int>& depths,
    const std::vector<int>& system_sizes, int n_seeds, std::uint64_t seed);

} // namespace shadowguard
