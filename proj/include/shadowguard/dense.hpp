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

#include <Eigen/Dense>

#include "shadowguard/pauli.hpp"
#include "shadowguard/statevector.hpp"

namespace shadowguard {

/// Dense 2^n x 2^n matrix of a Pauli sum (little-endian qubit order).
Eigen::MatrixXcd observable_to_dense(const ObservableSum& obs, int n_qubits);

/// Dense matrix of a single weighted Pauli string.
Eigen::MatrixXcd pauli_term_to_dense(const PauliTerm& term, int n_qubits);

struct GroundState {
    double energy = 0.0;
    Statevector state;
};

/**
 * @brief Minimal eigenpair by dense Hermitian diagonalization.
 *
 * Capacity guard n <= 12 (4096 x 4096). The returned eigenvector is unit
 * norm and satisfies ||Hv - Ev|| < 1e-8 (checked).
 */
GroundState ground_state_dense(const ObservableSum& obs, int n_qubits);

/// Trace distance T(rho, sigma) = ||rho - sigma||_1 / 2.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

} // namespace shadowguard
