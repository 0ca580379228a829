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
#include "shadowguard/entropy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shadowguard {

double page_entropy_asymptotic(int k, int n_qubits) {
    if (k < 1 || 2 * k > n_qubits) {
        throw std::invalid_argument(
            "page_entropy_asymptotic: need 1 <= k <= N/2");
    }
    return k * std::numbers::ln2 -
           std::pow(2.0, -static_cast<double>(n_qubits - 2 * k + 1));
}

double page_entropy_exact(long long d_a, long long d) {
    if (d_a < 1 || d < 1 || d % d_a != 0) {
        throw std::invalid_argument(
            "page_entropy_exact: d_A must divide d");
    }
    if (d_a * d_a > d) {
        throw std::invalid_argument(
            "page_entropy_exact: subsystem larger than its complement");
    }
    const long long d_b = d / d_a;
    double harmonic_tail = 0.0;
    // Sum smallest terms first for accuracy.
    for (long long j = d; j > d_b; --j) {
        harmonic_tail += 1.0 / static_cast<double>(j);
    }
    return harmonic_tail - static_cast<double>(d_a - 1) *
                               static_cast<double>(d_a) /
                               (2.0 * static_cast<double>(d));
}

double haar_average_purity(long long d_a, long long d_b) {
    if (d_a < 1 || d_b < 1) {
        throw std::invalid_argument(
            "haar_average_purity: dimensions must be positive");
    }
    return static_cast<double>(d_a + d_b) /
           (1.0 + static_cast<double>(d_a) * static_cast<double>(d_b));
}

} // namespace shadowguard
