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
#include "shadowguard/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shadowguard {

namespace {

using Complex = std::complex<double>;

void check_qubit(const Statevector& state, int qubit, const char* where) {
    if (qubit < 0 || qubit >= state.n_qubits()) {
        throw std::out_of_range(std::string(where) +
                                ": qubit index out of range");
    }
}

// Masks and base phase for applying coeff * P to basis states:
// P|i> = base * sign(i) |i ^ flip_mask| with sign(i) = (-1)^popcount(i & yz).
struct TermMasks {
    std::uint64_t flip = 0;
    std::uint64_t yz = 0;
    Complex base{1.0, 0.0};
};

TermMasks term_masks(const PauliTerm& term, int n_qubits, const char* where) {
    TermMasks m;
    m.base = term.coefficient;
    for (const auto& [q, p] : term.support) {
        if (q >= n_qubits) {
            throw std::invalid_argument(std::string(where) +
                                        ": term acts outside the register");
        }
        const std::uint64_t bit = 1ULL << q;
        switch (p) {
        case Pauli::X:
            m.flip |= bit;
            break;
        case Pauli::Y:
            m.flip |= bit;
            m.yz |= bit;
            m.base *= Complex(0.0, 1.0); // sigma_y |b> = i(-1)^b |1-b>
            break;
        case Pauli::Z:
            m.yz |= bit;
            break;
        }
    }
    return m;
}

} // namespace

Statevector Statevector::zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 24) {
        throw std::invalid_argument(
            "zero_state: n_qubits must be in [1, 24]");
    }
    std::vector<Complex> amps(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps[0] = Complex{1.0, 0.0};
    return Statevector(n_qubits, std::move(amps));
}

double Statevector::norm_sq() const {
    double total = 0.0;
    for (const auto& a : amps_) {
        total += std::norm(a);
    }
    return total;
}

Region::Region(std::vector<int> qubit_indices)
    : qubits(std::move(qubit_indices)) {
    if (qubits.empty()) {
        throw std::invalid_argument("Region: must contain at least one qubit");
    }
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] < 0) {
            throw std::invalid_argument("Region: negative qubit index");
        }
        if (i > 0 && qubits[i] <= qubits[i - 1]) {
            throw std::invalid_argument(
                "Region: indices must be strictly increasing");
        }
    }
}

Region Region::first_k(int k) {
    std::vector<int> qs(k);
    for (int i = 0; i < k; ++i) {
        qs[i] = i;
    }
    return Region(std::move(qs));
}

void DensityMatrix::validate(double tol) const {
    const auto dim = entries.rows();
    if (dim != entries.cols() || dim != (1LL << k_qubits)) {
        throw std::invalid_argument("DensityMatrix: bad dimensions");
    }
    if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    }
    if (std::abs(entries.trace().real() - 1.0) > tol ||
        std::abs(entries.trace().imag()) > tol) {
        throw std::invalid_argument("DensityMatrix: trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        entries, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue");
    }
}

void apply_rotation(Statevector& state, int qubit, Pauli axis, double angle) {
    check_qubit(state, qubit, "apply_rotation");
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("apply_rotation: non-finite angle");
    }
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    auto amps = state.amplitudes();
    const std::size_t dim = amps.size();
    const std::size_t stride = std::size_t{1} << qubit;

    switch (axis) {
    case Pauli::X:
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t low = 0; low < stride; ++low) {
                const std::size_t i0 = base + low;
                const std::size_t i1 = i0 + stride;
                const Complex a0 = amps[i0];
                const Complex a1 = amps[i1];
                amps[i0] = c * a0 + Complex(0.0, -s) * a1;
                amps[i1] = Complex(0.0, -s) * a0 + c * a1;
            }
        }
        break;
    case Pauli::Y:
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t low = 0; low < stride; ++low) {
                const std::size_t i0 = base + low;
                const std::size_t i1 = i0 + stride;
                const Complex a0 = amps[i0];
                const Complex a1 = amps[i1];
                amps[i0] = c * a0 - s * a1;
                amps[i1] = s * a0 + c * a1;
            }
        }
        break;
    case Pauli::Z: {
        const Complex phase0(c, -s);
        const Complex phase1(c, s);
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t low = 0; low < stride; ++low) {
                const std::size_t i0 = base + low;
                amps[i0] *= phase0;
                amps[i0 + stride] *= phase1;
            }
        }
        break;
    }
    }
}

void apply_cz(Statevector& state, int q1, int q2) {
    check_qubit(state, q1, "apply_cz");
    check_qubit(state, q2, "apply_cz");
    if (q1 == q2) {
        throw std::invalid_argument("apply_cz: qubits must differ");
    }
    const std::uint64_t mask = (1ULL << q1) | (1ULL << q2);
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) {
            amps[i] = -amps[i];
        }
    }
}

void accumulate_pauli_term(const Statevector& state, const PauliTerm& term,
                           Statevector& out) {
    const auto masks = term_masks(term, state.n_qubits(), "apply term");
    const auto in = state.amplitudes();
    auto dst = out.amplitudes();
    for (std::size_t i = 0; i < in.size(); ++i) {
        const bool odd = (std::popcount(i & masks.yz) & 1) != 0;
        const Complex c = odd ? -masks.base : masks.base;
        dst[i ^ masks.flip] += c * in[i];
    }
}

Statevector apply_observable(const ObservableSum& obs,
                             const Statevector& state) {
    Statevector out = Statevector::zero_state(state.n_qubits());
    out.amp(0) = Complex{0.0, 0.0};
    for (const auto& term : obs.terms()) {
        accumulate_pauli_term(state, term, out);
    }
    return out;
}

std::complex<double> expectation_term(const Statevector& state,
                                      const PauliTerm& term) {
    const auto masks = term_masks(term, state.n_qubits(), "expectation");
    const auto amps = state.amplitudes();
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const bool odd = (std::popcount(i & masks.yz) & 1) != 0;
        const Complex c = odd ? -masks.base : masks.base;
        acc += std::conj(amps[i ^ masks.flip]) * c * amps[i];
    }
    return acc;
}

double expectation(const Statevector& state, const ObservableSum& obs) {
    for (const auto& term : obs.terms()) {
        if (std::abs(term.coefficient.imag()) >=
            ObservableSum::kMergeTolerance) {
            throw std::invalid_argument(
                "expectation: observable is not Hermitian");
        }
    }
    Complex acc{0.0, 0.0};
    for (const auto& term : obs.terms()) {
        acc += expectation_term(state, term);
    }
    if (std::abs(acc.imag()) >= 1e-10) {
        throw std::runtime_error(
            "expectation: imaginary residue exceeds tolerance");
    }
    return acc.real();
}

DensityMatrix reduced_density_matrix(const Statevector& state,
                                     const Region& region) {
    const int n = state.n_qubits();
    if (region.max_qubit() >= n) {
        throw std::invalid_argument(
            "reduced_density_matrix: region outside register");
    }
    const int k = region.size();
    const int n_env = n - k;

    std::uint64_t region_mask = 0;
    for (int q : region.qubits) {
        region_mask |= 1ULL << q;
    }
    std::vector<int> env_qubits;
    env_qubits.reserve(n_env);
    for (int q = 0; q < n; ++q) {
        if ((region_mask >> q & 1) == 0) {
            env_qubits.push_back(q);
        }
    }

    // Scatter tables: reduced/environment index -> full-register bits.
    const std::size_t dim_a = std::size_t{1} << k;
    const std::size_t dim_e = std::size_t{1} << n_env;
    std::vector<std::uint64_t> scatter_a(dim_a, 0);
    for (std::size_t a = 0; a < dim_a; ++a) {
        std::uint64_t bits = 0;
        for (int j = 0; j < k; ++j) {
            if (a >> j & 1) {
                bits |= 1ULL << region.qubits[j];
            }
        }
        scatter_a[a] = bits;
    }
    std::vector<std::uint64_t> scatter_e(dim_e, 0);
    for (std::size_t e = 0; e < dim_e; ++e) {
        std::uint64_t bits = 0;
        for (int j = 0; j < n_env; ++j) {
            if (e >> j & 1) {
                bits |= 1ULL << env_qubits[j];
            }
        }
        scatter_e[e] = bits;
    }

    DensityMatrix rho;
    rho.k_qubits = k;
    rho.entries = Eigen::MatrixXcd::Zero(dim_a, dim_a);
    const auto amps = state.amplitudes();
    std::vector<Complex> column(dim_a);
    for (std::size_t e = 0; e < dim_e; ++e) {
        const std::uint64_t env_bits = scatter_e[e];
        for (std::size_t a = 0; a < dim_a; ++a) {
            column[a] = amps[env_bits | scatter_a[a]];
        }
        for (std::size_t a = 0; a < dim_a; ++a) {
            for (std::size_t b = 0; b < dim_a; ++b) {
                rho.entries(a, b) += column[a] * std::conj(column[b]);
            }
        }
    }
    return rho;
}

double purity_exact(const Statevector& state, const Region& region) {
    const DensityMatrix rho = reduced_density_matrix(state, region);
    // tr rho^2 = ||rho||_F^2 for Hermitian rho.
    return rho.entries.squaredNorm();
}

double renyi2_exact(const Statevector& state, const Region& region) {
    return -std::log(purity_exact(state, region));
}

std::complex<double> inner_product(const Statevector& a,
                                   const Statevector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    Complex acc{0.0, 0.0};
    const auto va = a.amplitudes();
    const auto vb = b.amplitudes();
    for (std::size_t i = 0; i < va.size(); ++i) {
        acc += std::conj(va[i]) * vb[i];
    }
    return acc;
}

double fidelity(const Statevector& a, const Statevector& b) {
    return std::norm(inner_product(a, b));
}

std::vector<std::uint8_t> sample_pauli_measurement(
    const Statevector& state, std::span<const Pauli> bases, Rng& rng) {
    const int n = state.n_qubits();
    if (static_cast<int>(bases.size()) != n) {
        throw std::invalid_argument(
            "sample_pauli_measurement: need one basis per qubit");
    }
    Statevector rotated = state;
    for (int q = 0; q < n; ++q) {
        switch (bases[q]) {
        case Pauli::X:
            // R_y(-pi/2) maps the x axis onto z.
            apply_rotation(rotated, q, Pauli::Y, -0.5 * std::numbers::pi);
            break;
        case Pauli::Y:
            // R_x(pi/2) maps the y axis onto z.
            apply_rotation(rotated, q, Pauli::X, 0.5 * std::numbers::pi);
            break;
        case Pauli::Z:
            break;
        }
    }
    const double u = rng.uniform();
    double cumulative = 0.0;
    const auto amps = rotated.amplitudes();
    std::size_t outcome = amps.size() - 1;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        cumulative += std::norm(amps[i]);
        if (u < cumulative) {
            outcome = i;
            break;
        }
    }
    std::vector<std::uint8_t> bits(n);
    for (int q = 0; q < n; ++q) {
        bits[q] = static_cast<std::uint8_t>(outcome >> q & 1);
    }
    return bits;
}

Statevector haar_random_state(int n_qubits, Rng& rng) {
    if (n_qubits < 1 || n_qubits > 12) {
        throw std::invalid_argument(
            "haar_random_state: n_qubits must be in [1, 12]");
    }
    Statevector state = Statevector::zero_state(n_qubits);
    auto amps = state.amplitudes();
    double norm_sq = 0.0;
    for (auto& a : amps) {
        a = Complex(rng.gaussian(), rng.gaussian());
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amps) {
        a *= inv;
    }
    return state;
}

} // namespace shadowguard
