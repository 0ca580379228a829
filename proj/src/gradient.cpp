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
#include "shadowguard/gradient.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "shadowguard/shadows.hpp"

namespace shadowguard {

namespace {

using Complex = std::complex<double>;

// <bra| sigma^axis_qubit |ket> without materializing the operator.
Complex pauli_matrix_element(const Statevector& bra, Pauli axis, int qubit,
                             const Statevector& ket) {
    const auto vb = bra.amplitudes();
    const auto vk = ket.amplitudes();
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t dim = vk.size();
    Complex acc{0.0, 0.0};
    switch (axis) {
    case Pauli::X:
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t low = 0; low < stride; ++low) {
                const std::size_t i0 = base + low;
                const std::size_t i1 = i0 + stride;
                acc += std::conj(vb[i0]) * vk[i1] + std::conj(vb[i1]) * vk[i0];
            }
        }
        break;
    case Pauli::Y:
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t low = 0; low < stride; ++low) {
                const std::size_t i0 = base + low;
                const std::size_t i1 = i0 + stride;
                acc += std::conj(vb[i0]) * Complex(0.0, -1.0) * vk[i1] +
                       std::conj(vb[i1]) * Complex(0.0, 1.0) * vk[i0];
            }
        }
        break;
    case Pauli::Z:
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t low = 0; low < stride; ++low) {
                const std::size_t i0 = base + low;
                const std::size_t i1 = i0 + stride;
                acc += std::conj(vb[i0]) * vk[i0] - std::conj(vb[i1]) * vk[i1];
            }
        }
        break;
    }
    return acc;
}

void unapply_gate(const GateOp& op, const Params& params, Statevector& state) {
    if (op.kind == GateOp::Kind::Rotation) {
        apply_rotation(state, op.qubit, op.axis,
                       -params.angles[op.param_index]);
    } else {
        apply_cz(state, op.qubit, op.q2); // self-inverse
    }
}

} // namespace

EnergyFn make_exact_energy(const CircuitSpec& circuit,
                           const ObservableSum& obs) {
    return [circuit, obs](const Params& params) {
        return expectation(prepare_state(circuit, params), obs);
    };
}

EnergyFn make_shadow_energy(const CircuitSpec& circuit,
                            const ObservableSum& obs,
                            std::size_t snapshots_per_eval, Rng rng) {
    auto rng_state = std::make_shared<Rng>(rng);
    return [circuit, obs, snapshots_per_eval,
            rng_state](const Params& params) {
        const ShadowSet shadows = collect_shadows(
            [&]() { return prepare_state(circuit, params); },
            snapshots_per_eval, *rng_state);
        return estimate_energy(shadows, obs);
    };
}

std::vector<double> parameter_shift_gradient(const CircuitSpec& circuit,
                                             const Params& params,
                                             const EnergyFn& energy) {
    if (!params.matches(circuit)) {
        throw std::invalid_argument(
            "parameter_shift_gradient: parameter shape mismatch");
    }
    const double shift = 0.5 * std::numbers::pi;
    std::vector<double> gradient(circuit.n_params());
    Params shifted = params;
    for (int i = 0; i < circuit.n_params(); ++i) {
        const double original = shifted.angles[i];
        shifted.angles[i] = original + shift;
        const double plus = energy(shifted);
        shifted.angles[i] = original - shift;
        const double minus = energy(shifted);
        shifted.angles[i] = original;
        gradient[i] = 0.5 * (plus - minus);
    }
    return gradient;
}

std::vector<double> exact_gradient_from_state(const CircuitSpec& circuit,
                                              const Params& params,
                                              const ObservableSum& obs,
                                              const Statevector& prepared) {
    const auto sequence = build_gate_sequence(circuit);
    // phi = U_{<=k}|0>, lambda = U_{>k}^dag H |psi>; the derivative of the
    // k-th rotation is Im <lambda| G_k |phi>.
    Statevector phi = prepared;
    Statevector lambda = apply_observable(obs, prepared);
    std::vector<double> gradient(circuit.n_params(), 0.0);
    for (auto it = sequence.rbegin(); it != sequence.rend(); ++it) {
        if (it->kind == GateOp::Kind::Rotation) {
            gradient[it->param_index] =
                pauli_matrix_element(lambda, it->axis, it->qubit, phi).imag();
        }
        unapply_gate(*it, params, phi);
        unapply_gate(*it, params, lambda);
    }
    return gradient;
}

std::vector<double> exact_gradient(const CircuitSpec& circuit,
                                   const Params& params,
                                   const ObservableSum& obs) {
    return exact_gradient_from_state(circuit, params, obs,
                                     prepare_state(circuit, params));
}

Params gd_step(const Params& params, const std::vector<double>& gradient,
               double eta) {
    if (gradient.size() != params.angles.size()) {
        throw std::invalid_argument("gd_step: gradient shape mismatch");
    }
    Params next = params;
    for (std::size_t i = 0; i < gradient.size(); ++i) {
        next.angles[i] -= eta * gradient[i];
    }
    return next;
}

double l2_norm(const std::vector<double>& values) {
    double total = 0.0;
    for (double v : values) {
        total += v * v;
    }
    return std::sqrt(total);
}

} // namespace shadowguard
