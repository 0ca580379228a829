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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "shadowguard/circuit.hpp"

namespace shadowguard {

/**
 * @brief Quantum Fisher information matrix
 * F_ij = 4 Re[<d_i psi|d_j psi> - <d_i psi|psi><psi|d_j psi>],
 * from exact statevector derivatives (generator insertion during replay).
 * Symmetric positive semidefinite; O((pN)^2) state work, intended for
 * moderate sizes.
 */
Eigen::MatrixXd qfim(const CircuitSpec& circuit, const Params& params);

/**
 * @brief Quadratic form v^T F(theta) v in one sweep via the directional
 * derivative state |d psi> = sum_i v_i |d_i psi>; equals the full-matrix
 * contraction to rounding at O(pN) gate cost.
 */
double qfim_quadratic_form(const CircuitSpec& circuit, const Params& params,
                           std::span<const double> direction);

/// Learning-rate step bound sqrt(eta^2/4 g^T F g) on the trace distance
/// between consecutive reduced states.
double trace_distance_step_bound(const std::vector<double>& gradient,
                                 const Eigen::MatrixXd& qfim_matrix,
                                 double eta);

/// Same bound evaluated without materializing F.
double trace_distance_step_bound(const CircuitSpec& circuit,
                                 const Params& params,
                                 const std::vector<double>& gradient,
                                 double eta);

/**
 * @brief Rigorous purity continuity bound: for trace distance T between
 * k-qubit states, |tr rho^2 - tr sigma^2| <= 1 - (1-T)^2 - T^2/(2^k - 1).
 */
double purity_change_bound(double trace_distance, int k_qubits);

} // namespace shadowguard
