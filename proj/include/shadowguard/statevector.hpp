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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "shadowguard/pauli.hpp"
#include "shadowguard/rng.hpp"

namespace shadowguard {

/**
 * @brief Dense pure state of n qubits.
 *
 * Little-endian indexing throughout: qubit q is bit q of the basis index,
 * so |q1 q0> = |b> with b = q0 + 2*q1. Gate application mutates in place
 * (single writer); copies are cheap and used wherever concurrent reads of
 * the same parameters are needed.
 */
class Statevector {
  public:
    /// All-zeros product state |0...0>. Capacity guard: 1 <= n <= 24.
    static Statevector zero_state(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    std::complex<double>& amp(std::size_t index) { return amps_[index]; }
    const std::complex<double>& amp(std::size_t index) const {
        return amps_[index];
    }
    std::span<const std::complex<double>> amplitudes() const { return amps_; }
    std::span<std::complex<double>> amplitudes() { return amps_; }

    double norm_sq() const;

  private:
    Statevector(int n_qubits, std::vector<std::complex<double>> amps)
        : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    int n_qubits_ = 0;
    std::vector<std::complex<double>> amps_;
};

/// Region A: strictly increasing qubit indices, at least one qubit.
struct Region {
    std::vector<int> qubits;

    Region() = default;
    explicit Region(std::vector<int> qubit_indices);
    /// The first k qubits {0, ..., k-1}.
    static Region first_k(int k);

    int size() const { return static_cast<int>(qubits.size()); }
    int max_qubit() const { return qubits.back(); }
};

/// Reduced density matrix on 2^k dimensions.
struct DensityMatrix {
    int k_qubits = 0;
    Eigen::MatrixXcd entries;

    /// Checks Hermiticity, unit trace and eigenvalue positivity.
    void validate(double tol = 1e-10) const;
};

/// exp(-i angle/2 * sigma^axis) on one qubit; norm preserving.
void apply_rotation(Statevector& state, int qubit, Pauli axis, double angle);

/// Controlled-Z: negates amplitudes with both target bits set.
void apply_cz(Statevector& state, int q1, int q2);

/// coeff * P applied to |state> accumulated into `out` (+=).
void accumulate_pauli_term(const Statevector& state, const PauliTerm& term,
                           Statevector& out);

/// H|state> for a Pauli-sum H.
Statevector apply_observable(const ObservableSum& obs,
                             const Statevector& state);

/// <state|H|state>; throws if H fails the Hermiticity invariant.
double expectation(const Statevector& state, const ObservableSum& obs);

/// <state|coeff*P|state> for a single term (complex in general).
std::complex<double> expectation_term(const Statevector& state,
                                      const PauliTerm& term);

/// Partial trace over the complement of `region`.
DensityMatrix reduced_density_matrix(const Statevector& state,
                                     const Region& region);

/// tr rho_A^2 for the reduced state on `region`.
double purity_exact(const Statevector& state, const Region& region);

/// Second Renyi entropy -ln tr rho_A^2, in nats.
double renyi2_exact(const Statevector& state, const Region& region);

/// |<a|b>|^2 for equal-size states.
double fidelity(const Statevector& a, const Statevector& b);

std::complex<double> inner_product(const Statevector& a,
                                   const Statevector& b);

/**
 * @brief One product-basis Pauli measurement shot.
 *
 * Rotates a copy of the state so the requested bases become the
 * computational basis and samples an outcome index from the Born
 * distribution. Returns one bit per qubit (0 = +1 eigenstate).
 */
std::vector<std::uint8_t> sample_pauli_measurement(
    const Statevector& state, std::span<const Pauli> bases, Rng& rng);

/// Haar-random pure state from 2^n complex normal amplitudes; n <= 12.
Statevector haar_random_state(int n_qubits, Rng& rng);

} // namespace shadowguard
