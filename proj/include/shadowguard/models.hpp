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

#include "shadowguard/graph.hpp"
#include "shadowguard/pauli.hpp"
#include "shadowguard/rng.hpp"

namespace shadowguard {

/**
 * @brief Heisenberg (XXX) model with a longitudinal field on an arbitrary
 * interaction graph:
 *
 *   H = J sum_{(i,j) in E} (X_i X_j + Y_i Y_j + Z_i Z_j) + h_z sum_i Z_i.
 *
 * Each edge contributes exactly three 2-local terms.
 */
ObservableSum heisenberg_graph(const Graph& graph, double coupling,
                               double field);

/// Ising chain with open boundaries: H = -J sum_{i=0}^{n-2} Z_i Z_{i+1}.
ObservableSum ising_chain(int n_qubits, double coupling);

/**
 * @brief Majorana operator chi_m (1-based m in [1, 2*n_qubits]) under the
 * Jordan-Wigner mapping, normalized so that {chi_i, chi_j} = delta_ij:
 *
 *   chi_{2i}   = X_1 ... X_{i-1} Y_i / sqrt(2)
 *   chi_{2i-1} = X_1 ... X_{i-1} Z_i / sqrt(2)
 *
 * with site i 1-based (qubit index i-1).
 */
PauliTerm jw_majorana(int majorana_index, int n_qubits);

/// Standard deviation of the SYK quartic couplings,
/// sqrt(3! J^2 / ((N-1)(N-2)(N-3))) with N the qubit count.
double syk_coupling_stddev(int n_qubits, double coupling);

/**
 * @brief Quartic SYK Hamiltonian on 2*n_qubits Majorana fermions,
 *
 *   H = sum_{i<j<k<l} J_{ijkl} chi_i chi_j chi_k chi_l,
 *
 * with J_{ijkl} drawn i.i.d. from N(0, 3! J^2 / ((N-1)(N-2)(N-3))),
 * N = n_qubits, and each strictly increasing Majorana index tuple
 * appearing once. Requires n_qubits >= 4 (the variance formula needs
 * N > 3). The expanded sum must canonicalize to real coefficients; a
 * residual imaginary part signals a phase bug and raises an error.
 */
ObservableSum syk_hamiltonian(int n_qubits, double coupling, Rng& rng);

} // namespace shadowguard
