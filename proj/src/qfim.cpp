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
#include "shadowguard/qfim.hpp"

#include <cmath>
#include <stdexcept>

namespace shadowguard {

namespace {

using Complex = std::complex<double>;

void apply_gate(const GateOp& op, const Params& params, Statevector& state) {
    if (op.kind == GateOp::Kind::Rotation) {
        apply_rotation(state, op.qubit, op.axis,
                       params.angles[op.param_index]);
    } else {
        apply_cz(state, op.qubit, op.q2);
    }
}

// state <- state + weight * (-i/2) sigma^axis_qubit |source>.
void accumulate_kick(const Statevector& source, Pauli axis, int qubit,
                     double weight, Statevector& state) {
    const auto in = source.amplitudes();
    auto out = state.amplitudes();
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t dim = in.size();
    const Complex half(0.0, -0.5 * weight); // weight * (-i/2)
    switch (axis) {
    case Pauli::X:
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t low = 0; low < stride; ++low) {
                const std::size_t i0 = base + low;
                const std::size_t i1 = i0 + stride;
                out[i0] += half * in[i1];
                out[i1] += half * in[i0];
            }
        }
        break;
    case Pauli::Y:
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t low = 0; low < stride; ++low) {
                const std::size_t i0 = base + low;
                const std::size_t i1 = i0 + stride;
                out[i0] += half * Complex(0.0, -1.0) * in[i1];
                out[i1] += half * Complex(0.0, 1.0) * in[i0];
            }
        }
        break;
    case Pauli::Z:
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t low = 0; low < stride; ++low) {
                const std::size_t i0 = base + low;
                const std::size_t i1 = i0 + stride;
                out[i0] += half * in[i0];
                out[i1] -= half * in[i1];
            }
        }
        break;
    }
}

} // namespace

Eigen::MatrixXd qfim(const CircuitSpec& circuit, const Params& params) {
    if (!params.matches(circuit)) {
        throw std::invalid_argument("qfim: parameter shape mismatch");
    }
    const auto sequence = build_gate_sequence(circuit);
    const int n_params = circuit.n_params();
    const std::size_t dim = std::size_t{1} << circuit.n_qubits;

    // Prefix states right after each parametrized gate.
    std::vector<Statevector> prefixes;
    prefixes.reserve(n_params);
    std::vector<std::size_t> gate_position(n_params);
    Statevector state = Statevector::zero_state(circuit.n_qubits);
    for (std::size_t g = 0; g < sequence.size(); ++g) {
        apply_gate(sequence[g], params, state);
        if (sequence[g].kind == GateOp::Kind::Rotation) {
            gate_position[sequence[g].param_index] = g;
            prefixes.push_back(state);
        }
    }
    const Statevector& psi = state;

    // Derivative states |d_i psi> = U_{>g(i)} (-i G_i / 2) U_{<=g(i)} |0>.
    // prefixes[] is ordered by gate position, which matches parameter order
    // only layer by layer; map explicitly.
    std::vector<Statevector> derivatives(
        static_cast<std::size_t>(n_params),
        Statevector::zero_state(circuit.n_qubits));
    int prefix_rank = 0;
    for (std::size_t g = 0; g < sequence.size(); ++g) {
        if (sequence[g].kind != GateOp::Kind::Rotation) {
            continue;
        }
        Statevector d = Statevector::zero_state(circuit.n_qubits);
        d.amp(0) = Complex{0.0, 0.0};
        accumulate_kick(prefixes[prefix_rank], sequence[g].axis,
                        sequence[g].qubit, 1.0, d);
        for (std::size_t h = g + 1; h < sequence.size(); ++h) {
            apply_gate(sequence[h], params, d);
        }
        derivatives[sequence[g].param_index] = std::move(d);
        ++prefix_rank;
    }

    Eigen::MatrixXcd dmat(dim, n_params);
    for (int i = 0; i < n_params; ++i) {
        for (std::size_t r = 0; r < dim; ++r) {
            dmat(r, i) = derivatives[i].amp(r);
        }
    }
    Eigen::VectorXcd psi_vec(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        psi_vec(r) = psi.amp(r);
    }
    const Eigen::MatrixXcd gram = dmat.adjoint() * dmat;
    const Eigen::VectorXcd overlaps = dmat.adjoint() * psi_vec;
    Eigen::MatrixXd fisher(n_params, n_params);
    for (int i = 0; i < n_params; ++i) {
        for (int j = 0; j < n_params; ++j) {
            const Complex value =
                gram(i, j) - overlaps(i) * std::conj(overlaps(j));
            fisher(i, j) = 4.0 * value.real();
        }
    }
    // Symmetrize away rounding asymmetry.
    fisher = 0.5 * (fisher + fisher.transpose()).eval();
    return fisher;
}

double qfim_quadratic_form(const CircuitSpec& circuit, const Params& params,
                           std::span<const double> direction) {
    if (!params.matches(circuit)) {
        throw std::invalid_argument(
            "qfim_quadratic_form: parameter shape mismatch");
    }
    if (direction.size() != static_cast<std::size_t>(circuit.n_params())) {
        throw std::invalid_argument(
            "qfim_quadratic_form: direction shape mismatch");
    }
    const auto sequence = build_gate_sequence(circuit);
    Statevector current = Statevector::zero_state(circuit.n_qubits);
    Statevector accum = Statevector::zero_state(circuit.n_qubits);
    accum.amp(0) = Complex{0.0, 0.0};
    for (const GateOp& op : sequence) {
        apply_gate(op, params, current);
        apply_gate(op, params, accum);
        if (op.kind == GateOp::Kind::Rotation) {
            accumulate_kick(current, op.axis, op.qubit,
                            direction[op.param_index], accum);
        }
    }
    const Complex overlap = inner_product(current, accum);
    const double norm_sq = accum.norm_sq();
    return 4.0 * (norm_sq - std::norm(overlap));
}

double trace_distance_step_bound(const std::vector<double>& gradient,
                                 const Eigen::MatrixXd& qfim_matrix,
                                 double eta) {
    const Eigen::Map<const Eigen::VectorXd> g(gradient.data(),
                                              gradient.size());
    const double quad = g.dot(qfim_matrix * g);
    return 0.5 * eta * std::sqrt(std::max(quad, 0.0));
}

double trace_distance_step_bound(const CircuitSpec& circuit,
                                 const Params& params,
                                 const std::vector<double>& gradient,
                                 double eta) {
    const double quad = qfim_quadratic_form(circuit, params, gradient);
    return 0.5 * eta * std::sqrt(std::max(quad, 0.0));
}

double purity_change_bound(double trace_distance, int k_qubits) {
    if (trace_distance < 0.0 || trace_distance > 1.0) {
        throw std::invalid_argument(
            "purity_change_bound: trace distance must be in [0, 1]");
    }
    if (k_qubits < 1) {
        throw std::invalid_argument("purity_change_bound: need k >= 1");
    }
    const double dim = std::pow(2.0, k_qubits);
    return 1.0 - (1.0 - trace_distance) * (1.0 - trace_distance) -
           trace_distance * trace_distance / (dim - 1.0);
}

} // namespace shadowguard
