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

// Measurement-budget calculators for randomized Pauli (classical shadow)
// estimation. The integer budgets are exact ceilings of the *_raw values;
// the raw forms are exposed because relations such as "doubling L adds
// 4^{k+1} ln 2 / eps^2" hold for the real-valued expressions, not for
// their ceilings.

/// Snapshots for jointly estimating L range-k observables to accuracy
/// eps with failure probability delta: 4^{k+1} ln(2L/delta) / eps^2.
double budget_observables_raw(int k, long long n_observables, double epsilon,
                              double delta);
long long budget_observables(int k, long long n_observables, double epsilon,
                             double delta);

/// Snapshots for a k-qubit subsystem purity:
/// 4^{k+1} * purity_upper_bound / (eps^2 delta).
double budget_purity_raw(int k, double epsilon, double delta,
                         double purity_upper_bound);
long long budget_purity(int k, double epsilon, double delta,
                        double purity_upper_bound);

/// Snapshots per shifted parameter point for an L-term gradient component:
/// 4^{k+1} L^2 ln(2L/delta) / eps^2.
double budget_gradient_raw(int k, long long n_terms, double epsilon,
                           double delta);
long long budget_gradient(int k, long long n_terms, double epsilon,
                          double delta);

} // namespace shadowguard
