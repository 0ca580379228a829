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
#include "shadowguard/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shadowguard {

namespace {

constexpr std::uint64_t kAxisStream = 0x61786573ULL;  // "axes"
constexpr std::uint64_t kAngleStream = 0x616e676cULL; // "angl"

void append_rotation_layer(std::vector<GateOp>& seq,
                           const CircuitSpec& circuit, int layer) {
    for (int q = 0; q < circuit.n_qubits; ++q) {
        GateOp op;
        op.kind = GateOp::Kind::Rotation;
        op.qubit = q;
        op.axis = circuit.axis(layer, q);
        op.param_index = layer * circuit.n_qubits + q;
        seq.push_back(op);
    }
}

void append_entangler_layer(std::vector<GateOp>& seq,
                            const CircuitSpec& circuit) {
    const int n = circuit.n_qubits;
    if (n < 2) {
        return; // no ring on a single qubit
    }
    const int n_gates = (n == 2) ? 1 : n; // single CZ on two qubits
    for (int i = 0; i < n_gates; ++i) {
        GateOp op;
        op.kind = GateOp::Kind::Cz;
        op.qubit = i;
        op.q2 = (i + 1) % n;
        seq.push_back(op);
    }
}

} // namespace

void CircuitSpec::validate() const {
    // build_circuit requires n >= 2; hand-built single-qubit circuits
    // (no entangler) are allowed for analytic fixtures.
    if (n_qubits < 1 || depth < 1) {
        throw std::invalid_argument("CircuitSpec: need n >= 1 and p >= 1");
    }
    if (axes.size() != static_cast<std::size_t>(n_params())) {
        throw std::invalid_argument("CircuitSpec: axes dimensions mismatch");
    }
    if (mirror_second_half && depth % 2 != 0) {
        throw std::invalid_argument(
            "CircuitSpec: mirror layout requires even depth");
    }
}

CircuitSpec CircuitSpec::prefix(int layers) const {
    if (layers < 1 || layers > depth) {
        throw std::invalid_argument("CircuitSpec::prefix: bad layer count");
    }
    CircuitSpec out;
    out.n_qubits = n_qubits;
    out.depth = layers;
    out.axes.assign(axes.begin(),
                    axes.begin() + static_cast<std::size_t>(layers) * n_qubits);
    out.mirror_second_half = false;
    if (mirror_second_half) {
        throw std::invalid_argument(
            "CircuitSpec::prefix: mirror circuits cannot be truncated");
    }
    return out;
}

Params Params::zeros(const CircuitSpec& circuit) {
    Params p;
    p.n_qubits = circuit.n_qubits;
    p.depth = circuit.depth;
    p.angles.assign(circuit.n_params(), 0.0);
    return p;
}

std::vector<GateOp> build_gate_sequence(const CircuitSpec& circuit) {
    circuit.validate();
    std::vector<GateOp> seq;
    const int n = circuit.n_qubits;
    seq.reserve(static_cast<std::size_t>(circuit.depth) * 2 * n);
    for (int layer = 0; layer < circuit.depth; ++layer) {
        const bool entangler_first =
            circuit.mirror_second_half && layer >= circuit.depth / 2;
        if (entangler_first) {
            append_entangler_layer(seq, circuit);
            append_rotation_layer(seq, circuit, layer);
        } else {
            append_rotation_layer(seq, circuit, layer);
            append_entangler_layer(seq, circuit);
        }
    }
    return seq;
}

CircuitSpec build_circuit(int n_qubits, int depth, Rng& rng) {
    if (n_qubits < 2 || depth < 1) {
        throw std::invalid_argument("build_circuit: need n >= 2 and p >= 1");
    }
    CircuitSpec circuit;
    circuit.n_qubits = n_qubits;
    circuit.depth = depth;
    circuit.axes.resize(static_cast<std::size_t>(depth) * n_qubits);
    Rng axis_rng = rng.derive(kAxisStream ^ rng.next_u64());
    for (auto& axis : circuit.axes) {
        axis = static_cast<Pauli>(axis_rng.uniform_below(3));
    }
    return circuit;
}

CircuitSpec build_identity_block_circuit(int n_qubits, int depth, Rng& rng) {
    if (depth < 2 || depth % 2 != 0) {
        throw std::invalid_argument(
            "build_identity_block_circuit: depth must be even and >= 2");
    }
    CircuitSpec circuit = build_circuit(n_qubits, depth, rng);
    circuit.mirror_second_half = true;
    const int half = depth / 2;
    for (int layer = half; layer < depth; ++layer) {
        const int mirrored = depth - 1 - layer;
        for (int q = 0; q < n_qubits; ++q) {
            circuit.axes[static_cast<std::size_t>(layer) * n_qubits + q] =
                circuit.axis(mirrored, q);
        }
    }
    return circuit;
}

void apply_circuit(const CircuitSpec& circuit, const Params& params,
                   Statevector& state) {
    if (!params.matches(circuit)) {
        throw std::invalid_argument("apply_circuit: parameter shape mismatch");
    }
    if (state.n_qubits() != circuit.n_qubits) {
        throw std::invalid_argument("apply_circuit: register size mismatch");
    }
    for (const GateOp& op : build_gate_sequence(circuit)) {
        if (op.kind == GateOp::Kind::Rotation) {
            apply_rotation(state, op.qubit, op.axis,
                           params.angles[op.param_index]);
        } else {
            apply_cz(state, op.qubit, op.q2);
        }
    }
}

Statevector prepare_state(const CircuitSpec& circuit, const Params& params) {
    Statevector state = Statevector::zero_state(circuit.n_qubits);
    apply_circuit(circuit, params, state);
    return state;
}

Params init_small_angle(const CircuitSpec& circuit, double eps_theta,
                        Rng& rng) {
    if (!(eps_theta >= 0.0) || eps_theta > 1.0) {
        throw std::invalid_argument(
            "init_small_angle: eps_theta must be in [0, 1]");
    }
    Params params = Params::zeros(circuit);
    if (eps_theta == 0.0) {
        return params;
    }
    Rng angle_rng = rng.derive(kAngleStream ^ rng.next_u64());
    const double bound = eps_theta * std::numbers::pi;
    for (auto& angle : params.angles) {
        angle = angle_rng.uniform(-bound, bound);
    }
    return params;
}

Params init_identity_block(const CircuitSpec& circuit, Rng& rng) {
    circuit.validate();
    if (!circuit.mirror_second_half) {
        throw std::invalid_argument(
            "init_identity_block: circuit lacks the mirror layout "
            "(use build_identity_block_circuit)");
    }
    const int n = circuit.n_qubits;
    const int half = circuit.depth / 2;
    Params params = Params::zeros(circuit);
    Rng angle_rng = rng.derive(kAngleStream ^ rng.next_u64());
    for (int layer = 0; layer < half; ++layer) {
        for (int q = 0; q < n; ++q) {
            params.at(layer, q) =
                angle_rng.uniform(-std::numbers::pi, std::numbers::pi);
        }
    }
    for (int layer = half; layer < circuit.depth; ++layer) {
        const int mirrored = circuit.depth - 1 - layer;
        for (int q = 0; q < n; ++q) {
            params.at(layer, q) = -params.at(mirrored, q);
        }
    }
    return params;
}

} // namespace shadowguard
