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
#include <functional>
#include <span>
#include <vector>

#include "shadowguard/pauli.hpp"
#include "shadowguard/rng.hpp"
#include "shadowguard/statevector.hpp"

namespace shadowguard {

/**
 * @brief T classical-shadow snapshots of an n-qubit state.
 *
 * Each snapshot stores one (basis, bit) pair per qubit, encoded in a
 * single byte as 2*basis + bit; the implied single-qubit matrix is
 * 3|s><s| - I. Snapshots are never materialized as dense matrices except
 * transiently inside the purity estimator, so memory scales as T * n.
 */
class ShadowSet {
  public:
    ShadowSet(int n_qubits, std::uint64_t seed)
        : n_qubits_(n_qubits), seed_(seed) {}

    int n_qubits() const { return n_qubits_; }
    std::uint64_t seed() const { return seed_; }
    std::size_t size() const {
        return n_qubits_ == 0 ? 0 : data_.size() / n_qubits_;
    }

    std::span<const std::uint8_t> snapshot(std::size_t t) const {
        return {data_.data() + t * n_qubits_,
                static_cast<std::size_t>(n_qubits_)};
    }

    void append(std::span<const Pauli> bases,
                std::span<const std::uint8_t> bits);
    void append_raw(std::span<const std::uint8_t> codes);

    static Pauli basis_of(std::uint8_t code) {
        return static_cast<Pauli>(code >> 1);
    }
    static int bit_of(std::uint8_t code) { return code & 1; }

  private:
    int n_qubits_;
    std::uint64_t seed_;
    std::vector<std::uint8_t> data_;
};

/// Prepares one fresh copy of the (possibly stochastic) source state.
using StateFactory = std::function<Statevector()>;

/**
 * @brief Randomized single-qubit Pauli tomography: T repetitions of
 * (fresh state, uniform random basis per qubit, one Born-rule shot).
 */
ShadowSet collect_shadows(const StateFactory& factory, std::size_t n_snapshots,
                          Rng& rng);

/**
 * @brief Empirical mean over snapshots of tr(term * rho_hat^(t)).
 *
 * A snapshot contributes 0 unless every supported qubit was measured in
 * the term's basis, in which case it contributes 3^k times the product of
 * outcome signs. Only supported qubits are read.
 */
double estimate_observable(const ShadowSet& shadows, const PauliTerm& term);

/// Sum of estimate_observable over terms, reusing the same snapshots.
double estimate_energy(const ShadowSet& shadows, const ObservableSum& obs);

/**
 * @brief Unbiased subsystem-purity estimator over distinct snapshot pairs,
 *
 *   p_hat = 1/(T(T-1)) sum_{t != t'} tr(rho_hat_A^t rho_hat_A^t'),
 *
 * computed exactly in O(T 4^k) via the Gram identity
 * sum_{t != t'} tr(rho^t rho^t') = ||sum_t rho_A^t||_F^2 - T 5^k.
 * The value may fall outside [0, 1] at small T and is reported raw.
 */
double estimate_purity(const ShadowSet& shadows, const Region& region);

/// Reference O(T^2 k) evaluation of the same U-statistic via per-qubit
/// closed-form pair factors; equal to estimate_purity to rounding.
double estimate_purity_pairwise(const ShadowSet& shadows,
                                const Region& region);

/// Monte-Carlo subsample of ordered distinct pairs (large-T mode).
double estimate_purity_subsampled(const ShadowSet& shadows,
                                  const Region& region, std::size_t n_pairs,
                                  Rng& rng);

/// Median over `n_batches` contiguous batches of per-batch pair estimates.
double estimate_purity_mom(const ShadowSet& shadows, const Region& region,
                           int n_batches);

struct Renyi2Estimate {
    double value = 0.0;
    /// Raw purity estimate before clamping into [2^-k, 1].
    double raw_purity = 0.0;
    bool clamped = false;
};

/// -ln(clamp(p_hat, [2^-k, 1])), with the clamp recorded.
Renyi2Estimate estimate_renyi2(const ShadowSet& shadows, const Region& region);

} // namespace shadowguard
