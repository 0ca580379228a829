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
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "shadowguard/circuit.hpp"
#include "shadowguard/dense.hpp"
#include "shadowguard/entropy.hpp"
#include "shadowguard/graph.hpp"
#include "shadowguard/models.hpp"
#include "shadowguard/statevector.hpp"

using namespace shadowguard;
using Catch::Approx;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

Statevector random_state(int n, Rng& rng) {
    return haar_random_state(n, rng);
}

// Independent partial-trace oracle: build the full |psi><psi| densely and
// contract the environment indices entry by entry.
Eigen::MatrixXcd brute_force_rdm(const Statevector& state,
                                 const std::vector<int>& region) {
    const int n = state.n_qubits();
    const std::size_t dim = state.dim();
    Eigen::MatrixXcd full(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            full(i, j) = state.amp(i) * std::conj(state.amp(j));
        }
    }
    const int k = static_cast<int>(region.size());
    const std::size_t dim_a = std::size_t{1} << k;
    Eigen::MatrixXcd reduced = Eigen::MatrixXcd::Zero(dim_a, dim_a);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            // Environment bits must agree.
            bool env_match = true;
            for (int q = 0; q < n; ++q) {
                if (std::find(region.begin(), region.end(), q) !=
                    region.end()) {
                    continue;
                }
                if ((i >> q & 1) != (j >> q & 1)) {
                    env_match = false;
                    break;
                }
            }
            if (!env_match) {
                continue;
            }
            std::size_t a = 0;
            std::size_t b = 0;
            for (int r = 0; r < k; ++r) {
                a |= (i >> region[r] & 1) << r;
                b |= (j >> region[r] & 1) << r;
            }
            reduced(a, b) += full(i, j);
        }
    }
    return reduced;
}

Statevector bell_pair() {
    Statevector state = Statevector::zero_state(2);
    state.amp(0) = Complex(1.0 / std::sqrt(2.0), 0.0);
    state.amp(3) = Complex(1.0 / std::sqrt(2.0), 0.0);
    return state;
}

} // namespace

TEST_CASE("zero state", "[simulator]") {
    const Statevector one = Statevector::zero_state(1);
    REQUIRE(one.amp(0) == Complex(1.0, 0.0));
    REQUIRE(one.amp(1) == Complex(0.0, 0.0));
    const Statevector two = Statevector::zero_state(2);
    REQUIRE(two.dim() == 4);
    REQUIRE(two.amp(0) == Complex(1.0, 0.0));
    for (std::size_t i = 1; i < 4; ++i) {
        REQUIRE(two.amp(i) == Complex(0.0, 0.0));
    }
    REQUIRE_THROWS_AS(Statevector::zero_state(25), std::invalid_argument);
    REQUIRE_THROWS_AS(Statevector::zero_state(0), std::invalid_argument);
}

TEST_CASE("single-qubit rotations", "[simulator]") {
    SECTION("zero angle is the identity") {
        Rng rng(1);
        Statevector state = random_state(3, rng);
        const Statevector before = state;
        apply_rotation(state, 1, Pauli::X, 0.0);
        REQUIRE(fidelity(before, state) == Approx(1.0));
    }
    SECTION("X pi flips |0> to -i|1>") {
        Statevector state = Statevector::zero_state(1);
        apply_rotation(state, 0, Pauli::X, kPi);
        REQUIRE(std::abs(state.amp(0)) < 1e-12);
        REQUIRE(state.amp(1).real() == Approx(0.0).margin(1e-12));
        REQUIRE(state.amp(1).imag() == Approx(-1.0));
    }
    SECTION("Y pi/2 gives equal weights") {
        Statevector state = Statevector::zero_state(1);
        apply_rotation(state, 0, Pauli::Y, kPi / 2);
        REQUIRE(std::norm(state.amp(0)) == Approx(0.5));
        REQUIRE(std::norm(state.amp(1)) == Approx(0.5));
    }
    SECTION("errors") {
        Statevector state = Statevector::zero_state(2);
        REQUIRE_THROWS_AS(apply_rotation(state, 2, Pauli::X, 0.1),
                          std::out_of_range);
        REQUIRE_THROWS_AS(apply_rotation(state, 0, Pauli::X,
                                         std::nan("")),
                          std::invalid_argument);
    }
}

TEST_CASE("controlled-Z", "[simulator]") {
    Statevector state = Statevector::zero_state(2);
    apply_cz(state, 0, 1);
    REQUIRE(state.amp(0) == Complex(1.0, 0.0)); // |00> unchanged

    // |11>: amplitude negated; applying twice restores.
    Statevector eleven = Statevector::zero_state(2);
    eleven.amp(0) = 0.0;
    eleven.amp(3) = 1.0;
    apply_cz(eleven, 0, 1);
    REQUIRE(eleven.amp(3) == Complex(-1.0, 0.0));
    apply_cz(eleven, 0, 1);
    REQUIRE(eleven.amp(3) == Complex(1.0, 0.0));

    REQUIRE_THROWS_AS(apply_cz(state, 0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(apply_cz(state, 0, 2), std::out_of_range);
}

TEST_CASE("norm preservation under random circuits", "[simulator]") {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_below(4));
        Statevector state = Statevector::zero_state(n);
        for (int g = 0; g < 60; ++g) {
            const int q = static_cast<int>(rng.uniform_below(n));
            if (rng.uniform() < 0.7) {
                apply_rotation(state, q,
                               static_cast<Pauli>(rng.uniform_below(3)),
                               rng.uniform(-kPi, kPi));
            } else {
                const int q2 = (q + 1) % n;
                apply_cz(state, q, q2);
            }
        }
        REQUIRE(std::abs(state.norm_sq() - 1.0) < 1e-10);
    }
}

TEST_CASE("expectation values", "[simulator]") {
    SECTION("sum of Z on the zero state") {
        const int n = 4;
        std::vector<PauliTerm> terms;
        for (int q = 0; q < n; ++q) {
            terms.push_back(PauliTerm::single(q, Pauli::Z));
        }
        const ObservableSum obs(std::move(terms));
        REQUIRE(expectation(Statevector::zero_state(n), obs) == Approx(4.0));
    }
    SECTION("off-diagonal term vanishes on |0...0>") {
        const ObservableSum obs({PauliTerm::single(0, Pauli::X)});
        REQUIRE(expectation(Statevector::zero_state(3), obs) ==
                Approx(0.0).margin(1e-14));
    }
    SECTION("Heisenberg single bond on |01>") {
        const ObservableSum h = heisenberg_graph(chain_graph(2), 1.0, 1.0);
        Statevector state = Statevector::zero_state(2);
        state.amp(0) = 0.0;
        state.amp(1) = 1.0; // qubit 0 flipped
        REQUIRE(expectation(state, h) == Approx(-1.0));
    }
    SECTION("non-Hermitian observables are rejected") {
        const ObservableSum bad = ObservableSum::unchecked(
            {PauliTerm::single(0, Pauli::X, Complex(0.0, 1.0))});
        REQUIRE_THROWS_AS(expectation(Statevector::zero_state(1), bad),
                          std::invalid_argument);
    }
}

TEST_CASE("reduced density matrices", "[simulator]") {
    SECTION("product state") {
        const DensityMatrix rho = reduced_density_matrix(
            Statevector::zero_state(2), Region({0}));
        REQUIRE(rho.entries(0, 0).real() == Approx(1.0));
        REQUIRE(std::abs(rho.entries(1, 1)) < 1e-14);
        rho.validate();
    }
    SECTION("Bell pair marginal is maximally mixed") {
        const DensityMatrix rho =
            reduced_density_matrix(bell_pair(), Region({0}));
        REQUIRE(rho.entries(0, 0).real() == Approx(0.5));
        REQUIRE(rho.entries(1, 1).real() == Approx(0.5));
        REQUIRE(std::abs(rho.entries(0, 1)) < 1e-14);
    }
    SECTION("random state matches the brute-force oracle") {
        Rng rng(23);
        const Statevector state = random_state(3, rng);
        const std::vector<int> region{0, 2};
        const DensityMatrix rho =
            reduced_density_matrix(state, Region(region));
        const Eigen::MatrixXcd oracle = brute_force_rdm(state, region);
        REQUIRE((rho.entries - oracle).cwiseAbs().maxCoeff() < 1e-12);
        rho.validate();
    }
}

TEST_CASE("partial-trace consistency with local observables", "[simulator]") {
    Rng rng(31);
    const Statevector state = random_state(4, rng);
    // <Z1 Z3> via the full state and via the reduced state on {1, 3}.
    const PauliTerm term(1.0, {{1, Pauli::Z}, {3, Pauli::Z}});
    const double full =
        expectation(state, ObservableSum::unchecked({term}));
    const DensityMatrix rho =
        reduced_density_matrix(state, Region({1, 3}));
    // In the reduced register, qubit 1 -> bit 0 and qubit 3 -> bit 1.
    const PauliTerm reduced_term(1.0, {{0, Pauli::Z}, {1, Pauli::Z}});
    const Eigen::MatrixXcd op = pauli_term_to_dense(reduced_term, 2);
    const double via_rdm = (op * rho.entries).trace().real();
    REQUIRE(full == Approx(via_rdm).margin(1e-10));
}

TEST_CASE("purity and second Renyi entropy", "[simulator]") {
    SECTION("product state") {
        const Statevector state = Statevector::zero_state(3);
        REQUIRE(purity_exact(state, Region({0, 1})) == Approx(1.0));
        REQUIRE(renyi2_exact(state, Region({0, 1})) ==
                Approx(0.0).margin(1e-12));
    }
    SECTION("Bell pair") {
        REQUIRE(purity_exact(bell_pair(), Region({0})) == Approx(0.5));
        REQUIRE(renyi2_exact(bell_pair(), Region({0})) ==
                Approx(std::log(2.0)));
    }
}

TEST_CASE("deep random circuits concentrate at the Page value",
          "[simulator][slow]") {
    // Mean S2 of a k=2 region at (n=10, p=60) within
    // [S_Page - 2^-7, S_Page].
    const int n = 10;
    const int p = 60;
    const int n_seeds = 100;
    Rng master(4242);
    double total = 0.0;
    for (int s = 0; s < n_seeds; ++s) {
        Rng rng = master.derive(s);
        const CircuitSpec circuit = build_circuit(n, p, rng);
        const Params params = init_small_angle(circuit, 1.0, rng);
        total += renyi2_exact(prepare_state(circuit, params),
                              Region::first_k(2));
    }
    const double mean = total / n_seeds;
    const double page = page_entropy_asymptotic(2, n);
    INFO("mean S2 = " << mean << ", Page = " << page);
    REQUIRE(mean >= page - std::pow(2.0, -7));
    REQUIRE(mean <= page);
}

TEST_CASE("fidelity", "[simulator]") {
    Rng rng(3);
    const Statevector state = random_state(3, rng);
    REQUIRE(fidelity(state, state) == Approx(1.0));

    Statevector a = Statevector::zero_state(2);
    Statevector b = Statevector::zero_state(2);
    b.amp(0) = 0.0;
    b.amp(2) = 1.0;
    REQUIRE(fidelity(a, b) == Approx(0.0).margin(1e-14));

    Statevector c = Statevector::zero_state(1);
    apply_rotation(c, 0, Pauli::Y, kPi / 2);
    REQUIRE(fidelity(Statevector::zero_state(1), c) == Approx(0.5));

    REQUIRE_THROWS_AS(fidelity(a, c), std::invalid_argument);
}

TEST_CASE("Pauli measurement sampling", "[simulator]") {
    SECTION("Z basis on |0> is deterministic") {
        Rng rng(9);
        const Statevector state = Statevector::zero_state(1);
        const std::vector<Pauli> bases{Pauli::Z};
        for (int i = 0; i < 20; ++i) {
            REQUIRE(sample_pauli_measurement(state, bases, rng)[0] == 0);
        }
    }
    SECTION("X basis on |+> is deterministic") {
        Rng rng(9);
        Statevector plus = Statevector::zero_state(1);
        apply_rotation(plus, 0, Pauli::Y, kPi / 2);
        const std::vector<Pauli> bases{Pauli::X};
        for (int i = 0; i < 20; ++i) {
            REQUIRE(sample_pauli_measurement(plus, bases, rng)[0] == 0);
        }
    }
    SECTION("X basis on |0> is a fair coin") {
        Rng rng(13);
        const Statevector state = Statevector::zero_state(1);
        const std::vector<Pauli> bases{Pauli::X};
        int zeros = 0;
        const int shots = 100000;
        for (int i = 0; i < shots; ++i) {
            if (sample_pauli_measurement(state, bases, rng)[0] == 0) {
                ++zeros;
            }
        }
        REQUIRE(std::abs(zeros / static_cast<double>(shots) - 0.5) < 0.01);
    }
}

TEST_CASE("Born-rule chi-square on a 3-qubit fixture", "[simulator][slow]") {
    Rng rng(21);
    Rng state_rng(77);
    const Statevector state = random_state(3, state_rng);
    const std::vector<Pauli> bases{Pauli::X, Pauli::Z, Pauli::Y};

    // Exact outcome distribution: rotate a copy the same way the sampler
    // does and read off the probabilities.
    Statevector rotated = state;
    apply_rotation(rotated, 0, Pauli::Y, -kPi / 2);
    apply_rotation(rotated, 2, Pauli::X, kPi / 2);
    std::vector<double> probs(8);
    for (std::size_t i = 0; i < 8; ++i) {
        probs[i] = std::norm(rotated.amp(i));
    }

    const int shots = 100000;
    std::vector<int> counts(8, 0);
    for (int i = 0; i < shots; ++i) {
        const auto bits = sample_pauli_measurement(state, bases, rng);
        std::size_t outcome = 0;
        for (int q = 0; q < 3; ++q) {
            outcome |= static_cast<std::size_t>(bits[q]) << q;
        }
        ++counts[outcome];
    }
    double chi_sq = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        const double expected = shots * probs[i];
        chi_sq += (counts[i] - expected) * (counts[i] - expected) / expected;
    }
    // 7 degrees of freedom; 24.3 is the 0.001 critical value.
    REQUIRE(chi_sq < 24.32);
}

TEST_CASE("Haar states", "[simulator]") {
    SECTION("whole-system purity is one") {
        Rng rng(5);
        const Statevector state = haar_random_state(1, rng);
        REQUIRE(std::abs(state.norm_sq() - 1.0) < 1e-12);
        REQUIRE(purity_exact(state, Region({0})) == Approx(1.0));
    }
    SECTION("<Z> averages to zero") {
        Rng rng(6);
        const ObservableSum z({PauliTerm::single(0, Pauli::Z)});
        double total = 0.0;
        double total_sq = 0.0;
        const int samples = 2000;
        for (int i = 0; i < samples; ++i) {
            const double v = expectation(haar_random_state(4, rng), z);
            total += v;
            total_sq += v * v;
        }
        const double mean = total / samples;
        const double stderr_mean = std::sqrt(
            (total_sq / samples - mean * mean) / (samples - 1.0));
        REQUIRE(std::abs(mean) < 3.0 * stderr_mean + 1e-6);
    }
    SECTION("mean purity matches the Haar average") {
        struct Case {
            int n;
            int k;
        };
        for (const Case c : {Case{4, 1}, Case{6, 2}, Case{8, 2}}) {
            Rng rng(100 + c.n);
            const long long d_a = 1LL << c.k;
            const long long d_b = 1LL << (c.n - c.k);
            const double expected = haar_average_purity(d_a, d_b);
            double total = 0.0;
            double total_sq = 0.0;
            const int samples = 2000;
            for (int i = 0; i < samples; ++i) {
                const double p = purity_exact(haar_random_state(c.n, rng),
                                              Region::first_k(c.k));
                total += p;
                total_sq += p * p;
            }
            const double mean = total / samples;
            const double stderr_mean = std::sqrt(
                (total_sq / samples - mean * mean) / (samples - 1.0));
            INFO("n=" << c.n << " k=" << c.k << " mean=" << mean
                      << " expected=" << expected);
            REQUIRE(std::abs(mean - expected) < 3.0 * stderr_mean);
        }
    }
    SECTION("capacity guard") {
        Rng rng(1);
        REQUIRE_THROWS_AS(haar_random_state(13, rng), std::invalid_argument);
    }
}

TEST_CASE("dense ground states", "[simulator]") {
    SECTION("sum of Z: ground state is |111>") {
        std::vector<PauliTerm> terms;
        for (int q = 0; q < 3; ++q) {
            terms.push_back(PauliTerm::single(q, Pauli::Z));
        }
        const auto gs = ground_state_dense(ObservableSum(std::move(terms)), 3);
        REQUIRE(gs.energy == Approx(-3.0));
        REQUIRE(std::norm(gs.state.amp(7)) == Approx(1.0));
    }
    SECTION("open ferromagnetic Ising chain") {
        const auto gs = ground_state_dense(ising_chain(4, 1.0), 4);
        REQUIRE(gs.energy == Approx(-3.0));
    }
    SECTION("capacity guard") {
        REQUIRE_THROWS_AS(ground_state_dense(ising_chain(13, 1.0), 13),
                          std::invalid_argument);
    }
}

TEST_CASE("trace distance", "[simulator]") {
    const DensityMatrix a = reduced_density_matrix(bell_pair(), Region({0}));
    const DensityMatrix b =
        reduced_density_matrix(Statevector::zero_state(2), Region({0}));
    // T(I/2, |0><0|) = 1/2.
    REQUIRE(trace_distance(a, b) == Approx(0.5));
    REQUIRE(trace_distance(a, a) == Approx(0.0).margin(1e-14));
}
