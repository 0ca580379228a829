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
#include "shadowguard/budgets.hpp"

#include <cmath>
#include <stdexcept>

namespace shadowguard {

namespace {

void check_common(int k, double epsilon, double delta) {
    if (k < 1) {
        throw std::invalid_argument("budget: locality k must be >= 1");
    }
    if (!(epsilon > 0.0) || epsilon > 1.0) {
        throw std::invalid_argument("budget: epsilon must be in (0, 1]");
    }
    if (!(delta > 0.0) || delta >= 1.0) {
        throw std::invalid_argument("budget: delta must be in (0, 1)");
    }
}

} // namespace

double budget_observables_raw(int k, long long n_observables, double epsilon,
                              double delta) {
    check_common(k, epsilon, delta);
    if (n_observables < 1) {
        throw std::invalid_argument("budget: need at least one observable");
    }
    return std::pow(4.0, k + 1) *
           std::log(2.0 * static_cast<double>(n_observables) / delta) /
           (epsilon * epsilon);
}

long long budget_observables(int k, long long n_observables, double epsilon,
                             double delta) {
    return static_cast<long long>(
        std::ceil(budget_observables_raw(k, n_observables, epsilon, delta)));
}

double budget_purity_raw(int k, double epsilon, double delta,
                         double purity_upper_bound) {
    check_common(k, epsilon, delta);
    if (!(purity_upper_bound > 0.0) || purity_upper_bound > 1.0) {
        throw std::invalid_argument(
            "budget: purity upper bound must be in (0, 1]");
    }
    return std::pow(4.0, k + 1) * purity_upper_bound /
           (epsilon * epsilon * delta);
}

long long budget_purity(int k, double epsilon, double delta,
                        double purity_upper_bound) {
    return static_cast<long long>(
        std::ceil(budget_purity_raw(k, epsilon, delta, purity_upper_bound)));
}

double budget_gradient_raw(int k, long long n_terms, double epsilon,
                           double delta) {
    const double l = static_cast<double>(n_terms);
    return budget_observables_raw(k, n_terms, epsilon, delta) * l * l;
}

long long budget_gradient(int k, long long n_terms, double epsilon,
                          double delta) {
    return static_cast<long long>(
        std::ceil(budget_gradient_raw(k, n_terms, epsilon, delta)));
}

} // namespace shadowguard
