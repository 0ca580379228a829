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
#include "shadowguard/shadows.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace shadowguard {

namespace {

using Complex = std::complex<double>;

// Single-qubit snapshot matrices 3|s><s| - I for the six outcomes,
// indexed by code = 2*basis + bit.
// |0/1>, |+/->, |+i/-i> eigenstates; all have trace 1.
struct Mat2 {
    Complex m00, m01, m10, m11;
};

constexpr Mat2 snapshot_matrix(int code) {
    const int basis = code >> 1;
    const int bit = code & 1;
    const double sign = bit == 0 ? 1.0 : -1.0;
    switch (basis) {
    case 0: // X: 3|+-><+-| - I = [[1/2, 3s/2], [3s/2, 1/2]]
        return {Complex(0.5, 0.0), Complex(1.5 * sign, 0.0),
                Complex(1.5 * sign, 0.0), Complex(0.5, 0.0)};
    case 1: // Y: [[1/2, -3si/2], [3si/2, 1/2]]
        return {Complex(0.5, 0.0), Complex(0.0, -1.5 * sign),
                Complex(0.0, 1.5 * sign), Complex(0.5, 0.0)};
    default: // Z: diag(2, -1) or diag(-1, 2)
        return {Complex(0.5 + 1.5 * sign, 0.0), Complex(0.0, 0.0),
                Complex(0.0, 0.0), Complex(0.5 - 1.5 * sign, 0.0)};
    }
}

// tr[(3|s><s|-I)(3|s'><s'|-I)] = 9 |<s|s'>|^2 - 4: 5 if the outcomes
// coincide, -4 if they share a basis and differ, 1/2 across bases.
double pair_factor(std::uint8_t code_a, std::uint8_t code_b) {
    if ((code_a >> 1) != (code_b >> 1)) {
        return 0.5;
    }
    return code_a == code_b ? 5.0 : -4.0;
}

void region_in_range(const ShadowSet& shadows, const Region& region) {
    if (region.max_qubit() >= shadows.n_qubits()) {
        throw std::invalid_argument("shadow purity: region outside register");
    }
    if (region.size() > 10) {
        throw std::invalid_argument(
            "shadow purity: region too large (k <= 10)");
    }
}

// Adds the region's reduced snapshot matrix (kron of single-qubit
// factors; region.qubits[0] = least significant reduced bit) onto `sum`.
void accumulate_reduced_snapshot(std::span<const std::uint8_t> snapshot,
                                 const Region& region,
                                 std::vector<Complex>& sum) {
    const int k = region.size();
    const std::size_t dim = std::size_t{1} << k;
    Mat2 mats[16];
    for (int j = 0; j < k; ++j) {
        mats[j] = snapshot_matrix(snapshot[region.qubits[j]]);
    }
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            Complex prod{1.0, 0.0};
            for (int j = 0; j < k; ++j) {
                const int abit = static_cast<int>(a >> j & 1);
                const int bbit = static_cast<int>(b >> j & 1);
                const Mat2& m = mats[j];
                const Complex entry = abit == 0
                                          ? (bbit == 0 ? m.m00 : m.m01)
                                          : (bbit == 0 ? m.m10 : m.m11);
                prod *= entry;
            }
            sum[a * dim + b] += prod;
        }
    }
}

} // namespace

void ShadowSet::append(std::span<const Pauli> bases,
                       std::span<const std::uint8_t> bits) {
    if (static_cast<int>(bases.size()) != n_qubits_ ||
        bits.size() != bases.size()) {
        throw std::invalid_argument("ShadowSet::append: size mismatch");
    }
    for (int q = 0; q < n_qubits_; ++q) {
        data_.push_back(static_cast<std::uint8_t>(
            (static_cast<int>(bases[q]) << 1) | bits[q]));
    }
}

void ShadowSet::append_raw(std::span<const std::uint8_t> codes) {
    if (static_cast<int>(codes.size()) != n_qubits_) {
        throw std::invalid_argument("ShadowSet::append_raw: size mismatch");
    }
    for (auto c : codes) {
        if (c > 5) {
            throw std::invalid_argument("ShadowSet::append_raw: bad code");
        }
        data_.push_back(c);
    }
}

ShadowSet collect_shadows(const StateFactory& factory,
                          std::size_t n_snapshots, Rng& rng) {
    if (n_snapshots < 1) {
        throw std::invalid_argument("collect_shadows: need T >= 1");
    }
    Statevector probe = factory();
    ShadowSet set(probe.n_qubits(), rng.seed());
    std::vector<Pauli> bases(probe.n_qubits());
    bool first = true;
    for (std::size_t t = 0; t < n_snapshots; ++t) {
        if (!first) {
            probe = factory();
        }
        first = false;
        for (auto& b : bases) {
            b = static_cast<Pauli>(rng.uniform_below(3));
        }
        const auto bits = sample_pauli_measurement(probe, bases, rng);
        set.append(bases, bits);
    }
    return set;
}

double estimate_observable(const ShadowSet& shadows, const PauliTerm& term) {
    if (shadows.size() == 0) {
        throw std::invalid_argument("estimate_observable: empty shadow set");
    }
    if (term.max_qubit() >= shadows.n_qubits()) {
        throw std::invalid_argument(
            "estimate_observable: term outside register");
    }
    if (term.support.empty()) {
        return term.coefficient.real(); // identity term
    }
    const double amplification = std::pow(3.0, term.weight());
    double total = 0.0;
    const std::size_t n_snapshots = shadows.size();
    for (std::size_t t = 0; t < n_snapshots; ++t) {
        const auto snap = shadows.snapshot(t);
        double value = amplification;
        for (const auto& [q, p] : term.support) {
            const std::uint8_t code = snap[q];
            if (ShadowSet::basis_of(code) != p) {
                value = 0.0;
                break;
            }
            if (ShadowSet::bit_of(code) != 0) {
                value = -value;
            }
        }
        total += value;
    }
    return term.coefficient.real() * total / static_cast<double>(n_snapshots);
}

double estimate_energy(const ShadowSet& shadows, const ObservableSum& obs) {
    if (shadows.size() == 0) {
        throw std::invalid_argument("estimate_energy: empty shadow set");
    }
    double total = 0.0;
    for (const auto& term : obs.terms()) {
        total += estimate_observable(shadows, term);
    }
    return total;
}

double estimate_purity(const ShadowSet& shadows, const Region& region) {
    region_in_range(shadows, region);
    const std::size_t n_snapshots = shadows.size();
    if (n_snapshots < 2) {
        throw std::invalid_argument("estimate_purity: need T >= 2");
    }
    const int k = region.size();
    const std::size_t dim = std::size_t{1} << k;
    std::vector<Complex> sum(dim * dim, Complex{0.0, 0.0});
    for (std::size_t t = 0; t < n_snapshots; ++t) {
        accumulate_reduced_snapshot(shadows.snapshot(t), region, sum);
    }
    // ||sum_t rho_t||_F^2 counts the diagonal pairs t == t', each of which
    // contributes tr(rho_t^2) = 5^k exactly.
    double frob_sq = 0.0;
    for (const auto& entry : sum) {
        frob_sq += std::norm(entry);
    }
    const double t_count = static_cast<double>(n_snapshots);
    const double diagonal = t_count * std::pow(5.0, k);
    return (frob_sq - diagonal) / (t_count * (t_count - 1.0));
}

double estimate_purity_pairwise(const ShadowSet& shadows,
                                const Region& region) {
    region_in_range(shadows, region);
    const std::size_t n_snapshots = shadows.size();
    if (n_snapshots < 2) {
        throw std::invalid_argument("estimate_purity: need T >= 2");
    }
    double total = 0.0;
    for (std::size_t t = 0; t < n_snapshots; ++t) {
        const auto snap_t = shadows.snapshot(t);
        for (std::size_t u = t + 1; u < n_snapshots; ++u) {
            const auto snap_u = shadows.snapshot(u);
            double product = 1.0;
            for (int q : region.qubits) {
                product *= pair_factor(snap_t[q], snap_u[q]);
            }
            total += product;
        }
    }
    // Unordered pairs counted once; the estimator averages ordered pairs.
    const double t_count = static_cast<double>(n_snapshots);
    return 2.0 * total / (t_count * (t_count - 1.0));
}

double estimate_purity_subsampled(const ShadowSet& shadows,
                                  const Region& region, std::size_t n_pairs,
                                  Rng& rng) {
    region_in_range(shadows, region);
    const std::size_t n_snapshots = shadows.size();
    if (n_snapshots < 2) {
        throw std::invalid_argument("estimate_purity: need T >= 2");
    }
    if (n_pairs < 1) {
        throw std::invalid_argument(
            "estimate_purity_subsampled: need at least one pair");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < n_pairs; ++i) {
        const std::size_t t = rng.uniform_below(n_snapshots);
        std::size_t u = rng.uniform_below(n_snapshots - 1);
        if (u >= t) {
            ++u;
        }
        const auto snap_t = shadows.snapshot(t);
        const auto snap_u = shadows.snapshot(u);
        double product = 1.0;
        for (int q : region.qubits) {
            product *= pair_factor(snap_t[q], snap_u[q]);
        }
        total += product;
    }
    return total / static_cast<double>(n_pairs);
}

double estimate_purity_mom(const ShadowSet& shadows, const Region& region,
                           int n_batches) {
    region_in_range(shadows, region);
    if (n_batches < 1) {
        throw std::invalid_argument("estimate_purity_mom: need >= 1 batch");
    }
    const std::size_t n_snapshots = shadows.size();
    if (n_snapshots < 2 * static_cast<std::size_t>(n_batches)) {
        throw std::invalid_argument(
            "estimate_purity_mom: need at least two snapshots per batch");
    }
    if (n_batches == 1) {
        return estimate_purity(shadows, region);
    }
    const int k = region.size();
    const std::size_t dim = std::size_t{1} << k;
    std::vector<double> batch_estimates;
    batch_estimates.reserve(n_batches);
    const std::size_t base = n_snapshots / n_batches;
    const std::size_t remainder = n_snapshots % n_batches;
    std::size_t start = 0;
    for (int b = 0; b < n_batches; ++b) {
        const std::size_t count = base + (static_cast<std::size_t>(b) < remainder ? 1 : 0);
        std::vector<Complex> sum(dim * dim, Complex{0.0, 0.0});
        for (std::size_t t = start; t < start + count; ++t) {
            accumulate_reduced_snapshot(shadows.snapshot(t), region, sum);
        }
        double frob_sq = 0.0;
        for (const auto& entry : sum) {
            frob_sq += std::norm(entry);
        }
        const double t_count = static_cast<double>(count);
        batch_estimates.push_back((frob_sq - t_count * std::pow(5.0, k)) /
                                  (t_count * (t_count - 1.0)));
        start += count;
    }
    std::sort(batch_estimates.begin(), batch_estimates.end());
    const std::size_t mid = batch_estimates.size() / 2;
    if (batch_estimates.size() % 2 == 1) {
        return batch_estimates[mid];
    }
    return 0.5 * (batch_estimates[mid - 1] + batch_estimates[mid]);
}

Renyi2Estimate estimate_renyi2(const ShadowSet& shadows,
                               const Region& region) {
    Renyi2Estimate out;
    out.raw_purity = estimate_purity(shadows, region);
    const double lower = std::pow(2.0, -region.size());
    const double clamped = std::clamp(out.raw_purity, lower, 1.0);
    out.clamped = clamped != out.raw_purity;
    out.value = -std::log(clamped);
    return out;
}

} // namespace shadowguard
