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
#include <string>
#include <vector>

#include "shadowguard/dense.hpp"
#include "shadowguard/graph.hpp"
#include "shadowguard/models.hpp"
#include "shadowguard/optimizer.hpp"

namespace shadowguard {

/**
 * @brief Model selector shared by the experiment drivers.
 *
 * Names: heisenberg-chain (open boundaries; the 1D benchmark geometry),
 * heisenberg-ring (periodic), heisenberg-graph (random regular graph),
 * ising (open chain), syk. Random models (graph couplings) are drawn once
 * from the given stream, so one master seed fixes one instance.
 */
struct ModelSpec {
    std::string name = "heisenberg-chain";
    int n_qubits = 10;
    double coupling = 1.0;
    double field = 1.0;
    int graph_degree = 3;
};

struct BuiltModel {
    ObservableSum hamiltonian;
    Graph graph;
    bool has_graph = false;
};

BuiltModel build_model(const ModelSpec& spec, Rng& rng);

// ---------------------------------------------------------------------
// Gradient-variance saturation scan (barren-plateau signature).

struct BpScanConfig {
    std::vector<int> sizes{6, 8, 10};
    std::vector<int> depths; // empty -> 1..60
    int n_seeds = 100;
    std::uint64_t seed = 1;
};

/// Variance of the first gradient component of <Z0 Z1> plus mean region
/// entropies over the (N, p) grid; one row per grid point.
std::vector<VarianceScanRow> run_bp_scan(const BpScanConfig& config);

// ---------------------------------------------------------------------
// Entropy-growth scan for the small-angle initialization family.

struct SmallAngleRow {
    double eps_theta = 0.0;
    int depth = 0;
    int seed = 0;
    double s2 = 0.0; // monitored-region entropy at this depth
};

struct SmallAngleConfig {
    int n_qubits = 12;
    std::vector<double> eps_values{0.0, 0.05, 0.1, 1.0};
    std::vector<int> depths{5, 10, 15, 20, 25, 30, 35, 40};
    int region_k = 2;
    int n_seeds = 100;
    std::uint64_t seed = 1;
};

std::vector<SmallAngleRow> run_small_angle_scan(const SmallAngleConfig& config);

/// Seed-mean entropy per (eps, depth), ordered as the config grids.
std::vector<std::vector<double>> small_angle_means(
    const SmallAngleConfig& config, const std::vector<SmallAngleRow>& rows);

// ---------------------------------------------------------------------
// Single-step entanglement-change experiment (learning-rate bounds).

struct StepBoundRow {
    int seed = 0;
    double eta = 0.0;
    double grad_norm = 0.0;
    double trace_distance_exact = 0.0;
    double delta_purity = 0.0;      // |tr rho^2 after - before|
    double purity_bound = 0.0;      // continuity bound at the exact T_A
    double step_bound = 0.0;        // QFIM estimate of T_A
};

struct StepBoundConfig {
    int n_qubits = 10;
    int depth = 100;
    double eps_theta = 0.05;
    std::vector<double> etas{1e-3, 1e-2, 1e-1, 1.0};
    int region_k = 2;
    int n_seeds = 500;
    std::uint64_t seed = 1;
    ModelSpec model; // defaults to the open Heisenberg chain
};

std::vector<StepBoundRow> run_step_bound(const StepBoundConfig& config);

// ---------------------------------------------------------------------
// Full optimization runs.

struct VqeConfig {
    ModelSpec model;
    int depth = 100;
    std::string init = "small-angle"; // small-angle | identity-block
    double eps_theta = 0.05;
    double alpha = 0.5;
    int region_k = 2;
    std::vector<double> etas{1.0, 0.1, 0.01, 0.001};
    double eta_decay = 0.1;
    int max_iters = 500;
    int max_restarts = 3;
    double convergence_tol = 0.0; // disabled: fixed-length runs
    int convergence_window = 10;
    bool layerwise = false;
    int layerwise_iters_per_stage = 5;
    int n_seeds = 1;
    std::uint64_t seed = 1;
};

struct VqeRunResult {
    int seed = 0;
    double eta = 0.0;
    RunRecord record;
};

/**
 * @brief One run per (seed, eta). The circuit and the initialization are
 * reproduced identically across the eta list at a fixed seed, so learning
 * rates are compared on the same instances. The Hamiltonian instance is
 * built once from the master seed.
 */
std::vector<VqeRunResult> run_vqe_experiment(const VqeConfig& config,
                                             BuiltModel* model_out = nullptr);

// ---------------------------------------------------------------------
// Exact ground-state reference data.

struct GroundTruthResult {
    double energy = 0.0;
    double s2_region = 0.0;
    double page_value = 0.0; // asymptotic Page entropy of the region
    double ratio = 0.0;      // s2_region / page_value
    int region_k = 0;
};

GroundTruthResult ground_truth(const ObservableSum& hamiltonian, int n_qubits,
                               const Region& region);

} // namespace shadowguard
