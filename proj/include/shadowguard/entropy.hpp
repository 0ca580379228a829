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

namespace shadowguard {

// All entropies in this project are in nats (natural logarithm).

/**
 * @brief Page entropy of a k-qubit region of an N-qubit random pure state,
 * asymptotic form: k ln 2 - 2^-(N - 2k + 1). Requires 1 <= k <= N/2.
 */
double page_entropy_asymptotic(int k, int n_qubits);

/**
 * @brief Exact Page average entanglement entropy (nats) for subsystem
 * dimension d_A inside total dimension d:
 *
 *   -(d_A - 1) d_A / (2 d) + sum_{j = d/d_A + 1}^{d} 1/j.
 *
 * Requires d_A >= 1, d_A divides d and d_A^2 <= d.
 */
double page_entropy_exact(long long d_a, long long d);

/// Haar-average subsystem purity (d_A + d_B) / (1 + d_A d_B).
double haar_average_purity(long long d_a, long long d_b);

} // namespace shadowguard
