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
#include <vector>

#include "shadowguard/pauli.hpp"
#include "shadowguard/rng.hpp"
#include "shadowguard/statevector.hpp"

namespace shadowguard {

/**
 * @brief Fixed structure of the hardware-efficient ansatz: p layers of
 * per-qubit single-axis rotations interleaved with a ring of CZ gates
 * (pairs (i, i+1 mod n); a single CZ for n = 2).
 *
 * Standard layers apply rotations first, then the entangler. When
 * `mirror_second_half` is set (identity-block circuits), layers in the
 * second half apply the entangler first and their axes mirror the first
 * half, so that angle choices alone can realize the exact identity.
 *
 * Axes are immutable after construction; gradients index parameters as
 * layer * n_qubits + qubit.
 */
struct CircuitSpec {
    int n_qubits = 0;
    int depth = 0;
    std::vector<Pauli> axes; // depth * n_qubits, row-major by layer
    bool mirror_second_half = false;

    Pauli axis(int layer, int qubit) const {
        return axes[static_cast<std::size_t>(layer) * n_qubits + qubit];
    }
    int n_params() const { return depth * n_qubits; }

    /// First `layers` layers as a standalone circuit (layerwise growth).
    CircuitSpec prefix(int layers) const;

    void validate() const;
};

/// Variational angles, same layout as the axes array. Stored unwrapped:
/// gradient updates may leave [-pi, pi).
struct Params {
    int n_qubits = 0;
    int depth = 0;
    std::vector<double> angles;

    static Params zeros(const CircuitSpec& circuit);
    double& at(int layer, int qubit) {
        return angles[static_cast<std::size_t>(layer) * n_qubits + qubit];
    }
    double at(int layer, int qubit) const {
        return angles[static_cast<std::size_t>(layer) * n_qubits + qubit];
    }
    bool matches(const CircuitSpec& circuit) const {
        return n_qubits == circuit.n_qubits && depth == circuit.depth &&
               angles.size() == static_cast<std::size_t>(circuit.n_params());
    }
};

/// Flattened gate list; rotations carry their parameter index.
struct GateOp {
    enum class Kind : std::uint8_t { Rotation, Cz };
    Kind kind = Kind::Rotation;
    int qubit = 0;
    Pauli axis = Pauli::Z;
    int param_index = -1;
    int q2 = 0; // CZ partner
};

std::vector<GateOp> build_gate_sequence(const CircuitSpec& circuit);

/// Random axes drawn independently and uniformly from {X, Y, Z}.
CircuitSpec build_circuit(int n_qubits, int depth, Rng& rng);

/**
 * @brief Circuit supporting an exact identity-block initialization:
 * random axes in the first p/2 layers, mirrored axes and entangler-first
 * order in the last p/2. Requires even depth.
 */
CircuitSpec build_identity_block_circuit(int n_qubits, int depth, Rng& rng);

/// U(theta)|0...0>.
Statevector prepare_state(const CircuitSpec& circuit, const Params& params);

/// Apply U(theta) to an existing state in place.
void apply_circuit(const CircuitSpec& circuit, const Params& params,
                   Statevector& state);

/**
 * @brief Angles i.i.d. uniform on [-eps*pi, eps*pi).
 *
 * eps in [0, 1]; eps = 0 gives the all-zeros (trivially unentangled)
 * initialization, eps = 1 the full-range random one.
 */
Params init_small_angle(const CircuitSpec& circuit, double eps_theta,
                        Rng& rng);

/**
 * @brief Identity-block initialization: uniform random angles in the first
 * p/2 layers, negated mirror angles in the last p/2, so the circuit
 * evaluates to the identity exactly. Requires a circuit built by
 * build_identity_block_circuit (and even depth).
 */
Params init_identity_block(const CircuitSpec& circuit, Rng& rng);

} // namespace shadowguard
