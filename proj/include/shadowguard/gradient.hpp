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

#include <functional>
#include <vector>

#include "shadowguard/circuit.hpp"
#include "shadowguard/pauli.hpp"
#include "shadowguard/rng.hpp"
#include "shadowguard/statevector.hpp"

namespace shadowguard {

/// Cost evaluator for one parameter setting (exact or estimated).
using EnergyFn = std::function<double(const Params&)>;

/// Exact expectation <psi(theta)|H|psi(theta)>.
EnergyFn make_exact_energy(const CircuitSpec& circuit,
                           const ObservableSum& obs);

/**
 * @brief Shadow-based evaluator: every call collects a fresh shadow set of
 * `snapshots_per_eval` snapshots at the given parameters and returns the
 * estimated energy. Used for gradient estimation, where each shifted
 * point gets its own tomography run.
 */
EnergyFn make_shadow_energy(const CircuitSpec& circuit,
                            const ObservableSum& obs,
                            std::size_t snapshots_per_eval, Rng rng);

/**
 * @brief Parameter-shift gradient: component i is
 * (E(theta + pi/2 e_i) - E(theta - pi/2 e_i)) / 2,
 * exact for rotation gates exp(-i theta G / 2) with G^2 = I.
 */
std::vector<double> parameter_shift_gradient(const CircuitSpec& circuit,
                                             const Params& params,
                                             const EnergyFn& energy);

/**
 * @brief Exact analytic gradient via one forward and one backward sweep
 * (adjoint method); identical to the exact-evaluator parameter-shift
 * gradient, at O(pN) instead of O((pN)^2) gate cost.
 */
std::vector<double> exact_gradient(const CircuitSpec& circuit,
                                   const Params& params,
                                   const ObservableSum& obs);

/// exact_gradient reusing an already prepared |psi(theta)>.
std::vector<double> exact_gradient_from_state(const CircuitSpec& circuit,
                                              const Params& params,
                                              const ObservableSum& obs,
                                              const Statevector& prepared);

/// Plain gradient-descent update theta' = theta - eta * gradient.
Params gd_step(const Params& params, const std::vector<double>& gradient,
               double eta);

double l2_norm(const std::vector<double>& values);

} // namespace shadowguard
