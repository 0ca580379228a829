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

#include <cmath>
#include <complex>

#include "shadowguard/budgets.hpp"
#include "shadowguard/circuit.hpp"
#include "shadowguard/models.hpp"
#include "shadowguard/shadows.hpp"
#include "shadowguard/statevector.hpp"

using namespace shadowguard;
using Catch::Approx;
using Complex = std::complex<double>;

namespace {

StateFactory fixed_state(const Statevector& state) {
    return [state]() { return state; };
}

Statevector bell_pair() {
    Statevector state = Statevector::zero_state(2);
    state.amp(0) = Complex(1.0 / std::sqrt(2.0), 0.0);
    state.amp(3) = Complex(1.0 / std::sqrt(2.0), 0.0);
    return state;
}

// Independent reconstruction of the single-qubit snapshot matrix.
Eigen::Matrix2cd code_matrix(std::uint8_t code) {
    const Pauli basis = ShadowSet::basis_of(code);
    const int bit = ShadowSet::bit_of(code);
    Eigen::Vector2cd ket;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (basis) {
    case Pauli::X:
        ket << inv_sqrt2, (bit == 0 ? inv_sqrt2 : -inv_sqrt2);
        break;
    case Pauli::Y:
        ket << inv_sqrt2,
            (bit == 0 ? Complex(0, inv_sqrt2) : Complex(0, -inv_sqrt2));
        break;
    case Pauli::Z:
        ket << (bit == 0 ? 1.0 : 0.0), (bit == 0 ? 0.0 : 1.0);
        break;
    }
    return 3.0 * ket * ket.adjoint() - Eigen::Matrix2cd::Identity();
}

} // namespace

TEST_CASE("shadow acquisition", "[shadows]") {
    SECTION("fixed seed reproduces the set") {
        const Statevector state = Statevector::zero_state(3);
        Rng a(31);
        Rng b(31);
        const ShadowSet sa = collect_shadows(fixed_state(state), 50, a);
        const ShadowSet sb = collect_shadows(fixed_state(state), 50, b);
        REQUIRE(sa.size() == 50);
        for (std::size_t t = 0; t < sa.size(); ++t) {
            const auto ra = sa.snapshot(t);
            const auto rb = sb.snapshot(t);
            for (int q = 0; q < 3; ++q) {
                REQUIRE(ra[q] == rb[q]);
            }
        }
    }
    SECTION("bases are uniform") {
        Rng rng(5);
        const ShadowSet set =
            collect_shadows(fixed_state(Statevector::zero_state(2)), 10000,
                            rng);
        int counts[3] = {0, 0, 0};
        for (std::size_t t = 0; t < set.size(); ++t) {
            for (int q = 0; q < 2; ++q) {
                ++counts[static_cast<int>(
                    ShadowSet::basis_of(set.snapshot(t)[q]))];
            }
        }
        const double total = 2.0 * 10000;
        for (int c : counts) {
            REQUIRE(std::abs(c / total - 1.0 / 3.0) < 0.02);
        }
    }
    SECTION("snapshot mean reproduces the state") {
        Rng rng(7);
        const ShadowSet set =
            collect_shadows(fixed_state(Statevector::zero_state(1)), 10000,
                            rng);
        Eigen::Matrix2cd mean = Eigen::Matrix2cd::Zero();
        for (std::size_t t = 0; t < set.size(); ++t) {
            mean += code_matrix(set.snapshot(t)[0]);
        }
        mean /= static_cast<double>(set.size());
        REQUIRE(std::abs(mean(0, 0).real() - 1.0) < 0.05);
        REQUIRE(std::abs(mean(1, 1).real() - 0.0) < 0.05);
    }
}

TEST_CASE("observable estimation", "[shadows]") {
    SECTION("single-snapshot values of <Z> are 0 or +-3") {
        Rng rng(3);
        const PauliTerm z = PauliTerm::single(0, Pauli::Z);
        for (int i = 0; i < 50; ++i) {
            const ShadowSet set = collect_shadows(
                fixed_state(Statevector::zero_state(1)), 1, rng);
            const double value = estimate_observable(set, z);
            REQUIRE((value == 0.0 || value == 3.0 || value == -3.0));
        }
    }
    SECTION("<Z> on |0> converges to one") {
        Rng rng(11);
        const ShadowSet set = collect_shadows(
            fixed_state(Statevector::zero_state(1)), 100000, rng);
        REQUIRE(estimate_observable(set, PauliTerm::single(0, Pauli::Z)) ==
                Approx(1.0).margin(0.02));
    }
    SECTION("zero coefficient gives exactly zero") {
        Rng rng(1);
        const ShadowSet set = collect_shadows(
            fixed_state(Statevector::zero_state(2)), 100, rng);
        REQUIRE(estimate_observable(set,
                                    PauliTerm::single(0, Pauli::Z, 0.0)) ==
                0.0);
    }
    SECTION("<Z0 Z1> on |00>") {
        Rng rng(13);
        const ShadowSet set = collect_shadows(
            fixed_state(Statevector::zero_state(2)), 100000, rng);
        const PauliTerm zz(1.0, {{0, Pauli::Z}, {1, Pauli::Z}});
        REQUIRE(estimate_observable(set, zz) == Approx(1.0).margin(0.05));
    }
    SECTION("unbiased within 4 standard errors on a random state") {
        Rng state_rng(17);
        const Statevector state = haar_random_state(4, state_rng);
        const PauliTerm term(1.0, {{1, Pauli::X}, {3, Pauli::Y}});
        const double oracle =
            expectation(state, ObservableSum::unchecked({term}));
        // Batch means give an empirical standard error.
        Rng rng(19);
        const int n_batches = 100;
        const int batch = 1000;
        double total = 0.0;
        double total_sq = 0.0;
        for (int b = 0; b < n_batches; ++b) {
            const ShadowSet set =
                collect_shadows(fixed_state(state), batch, rng);
            const double est = estimate_observable(set, term);
            total += est;
            total_sq += est * est;
        }
        const double mean = total / n_batches;
        const double batch_var =
            (total_sq / n_batches - mean * mean) * n_batches /
            (n_batches - 1.0);
        const double stderr_mean = std::sqrt(batch_var / n_batches);
        REQUIRE(std::abs(mean - oracle) < 4.0 * stderr_mean + 1e-9);
    }
    SECTION("locality: bases outside the support never matter") {
        Rng rng(23);
        Rng state_rng(29);
        const Statevector state = haar_random_state(3, state_rng);
        const ShadowSet set = collect_shadows(fixed_state(state), 200, rng);
        const PauliTerm term(0.7, {{0, Pauli::Z}, {2, Pauli::X}});
        const double before = estimate_observable(set, term);
        // Rewrite qubit 1's records arbitrarily.
        ShadowSet mutated(set.n_qubits(), set.seed());
        for (std::size_t t = 0; t < set.size(); ++t) {
            std::vector<std::uint8_t> codes(set.snapshot(t).begin(),
                                            set.snapshot(t).end());
            codes[1] = static_cast<std::uint8_t>(t % 6);
            mutated.append_raw(codes);
        }
        REQUIRE(estimate_observable(mutated, term) == before);
    }
    SECTION("errors") {
        const ShadowSet empty(2, 0);
        REQUIRE_THROWS_AS(
            estimate_observable(empty, PauliTerm::single(0, Pauli::Z)),
            std::invalid_argument);
    }
}

TEST_CASE("energy estimation", "[shadows]") {
    SECTION("sum of Z on |0000>") {
        Rng rng(37);
        std::vector<PauliTerm> terms;
        for (int q = 0; q < 4; ++q) {
            terms.push_back(PauliTerm::single(q, Pauli::Z));
        }
        const ObservableSum obs(std::move(terms));
        const ShadowSet set = collect_shadows(
            fixed_state(Statevector::zero_state(4)), 100000, rng);
        REQUIRE(estimate_energy(set, obs) == Approx(4.0).margin(0.1));
    }
    SECTION("empty Hamiltonian gives zero") {
        Rng rng(1);
        const ShadowSet set = collect_shadows(
            fixed_state(Statevector::zero_state(2)), 10, rng);
        REQUIRE(estimate_energy(set, ObservableSum()) == 0.0);
    }
}

TEST_CASE("diagonal-basis energy estimator variance (two-bitstring mixture)",
          "[shadows][slow]") {
    // H = -J sum Z_i Z_{i+1} is diagonal, so single z-basis shots estimate
    // it directly; on the mixture (1-l)|0..0> + l|Neel> the single-shot
    // estimator takes values -+J(N-1) and its variance over repetitions of
    // the T-shot mean is 4 J^2 (N-1)^2 l (1-l) / T.
    const int n = 5;
    const double lambda = 0.3;
    const ObservableSum h = ising_chain(n, 1.0);
    Statevector neel = Statevector::zero_state(n);
    neel.amp(0) = 0.0;
    neel.amp(0b01010) = 1.0;
    const Statevector zeros = Statevector::zero_state(n);
    const std::vector<Pauli> bases(n, Pauli::Z);

    Rng rng(41);
    const int n_reps = 2000;
    const int shots = 50;
    double total = 0.0;
    double total_sq = 0.0;
    for (int r = 0; r < n_reps; ++r) {
        double acc = 0.0;
        for (int t = 0; t < shots; ++t) {
            const Statevector& source = rng.uniform() < lambda ? neel : zeros;
            const auto bits = sample_pauli_measurement(source, bases, rng);
            Statevector basis_state = Statevector::zero_state(n);
            basis_state.amp(0) = 0.0;
            std::size_t index = 0;
            for (int q = 0; q < n; ++q) {
                index |= static_cast<std::size_t>(bits[q]) << q;
            }
            basis_state.amp(index) = 1.0;
            acc += expectation(basis_state, h);
        }
        const double mean_energy = acc / shots;
        total += mean_energy;
        total_sq += mean_energy * mean_energy;
    }
    const double mean = total / n_reps;
    const double variance = total_sq / n_reps - mean * mean;
    const double expected = 4.0 * (n - 1) * (n - 1) * lambda * (1 - lambda) /
                            shots;
    INFO("variance " << variance << " expected " << expected);
    REQUIRE(variance == Approx(expected).epsilon(0.10));
}

TEST_CASE("purity estimation", "[shadows]") {
    SECTION("product state, k=2") {
        Rng rng(43);
        const ShadowSet set = collect_shadows(
            fixed_state(Statevector::zero_state(4)), 10000, rng);
        REQUIRE(estimate_purity(set, Region({0, 1})) ==
                Approx(1.0).margin(0.05));
    }
    SECTION("Bell marginal") {
        Rng rng(47);
        const ShadowSet set =
            collect_shadows(fixed_state(bell_pair()), 10000, rng);
        REQUIRE(estimate_purity(set, Region({0})) ==
                Approx(0.5).margin(0.05));
    }
    SECTION("Gram aggregation equals the explicit pair loop") {
        Rng state_rng(53);
        const Statevector state = haar_random_state(4, state_rng);
        Rng rng(59);
        const ShadowSet set = collect_shadows(fixed_state(state), 400, rng);
        for (const auto& region :
             {Region({0}), Region({1, 3}), Region({0, 1, 2})}) {
            REQUIRE(estimate_purity(set, region) ==
                    Approx(estimate_purity_pairwise(set, region))
                        .margin(1e-10));
        }
    }
    SECTION("T=2 uses exactly the two ordered pairs") {
        ShadowSet set(1, 0);
        const std::uint8_t z0 = 4; // Z basis, bit 0
        const std::uint8_t x0 = 0; // X basis, bit 0
        set.append_raw(std::vector<std::uint8_t>{z0});
        set.append_raw(std::vector<std::uint8_t>{x0});
        // tr(rho_1 rho_2) = 1/2 across bases; both ordered pairs agree.
        REQUIRE(estimate_purity(set, Region({0})) == Approx(0.5));
    }
    SECTION("T < 2 is rejected") {
        ShadowSet set(1, 0);
        set.append_raw(std::vector<std::uint8_t>{4});
        REQUIRE_THROWS_AS(estimate_purity(set, Region({0})),
                          std::invalid_argument);
    }
    SECTION("subsampled mode approximates the full estimator") {
        Rng state_rng(61);
        const Statevector state = haar_random_state(3, state_rng);
        Rng rng(67);
        const ShadowSet set = collect_shadows(fixed_state(state), 3000, rng);
        const double full = estimate_purity(set, Region({0, 1}));
        Rng pair_rng(71);
        const double sub =
            estimate_purity_subsampled(set, Region({0, 1}), 200000, pair_rng);
        REQUIRE(sub == Approx(full).margin(0.15));
    }
}

TEST_CASE("purity estimator hits the prescribed failure rate",
          "[shadows][slow]") {
    // Deep random circuit, k=2: with T snapshots from the purity budget at
    // the true purity, the rate of |error| > 0.1 stays below delta = 0.1.
    Rng circuit_rng(2025);
    const int n = 10;
    const CircuitSpec circuit = build_circuit(n, 60, circuit_rng);
    const Params params = init_small_angle(circuit, 1.0, circuit_rng);
    const Statevector state = prepare_state(circuit, params);
    const Region region = Region::first_k(2);
    const double exact = purity_exact(state, region);
    const long long budget = budget_purity(2, 0.1, 0.1, exact);

    Rng rng(73);
    const int n_reps = 200;
    int failures = 0;
    for (int r = 0; r < n_reps; ++r) {
        const ShadowSet set = collect_shadows(
            fixed_state(state), static_cast<std::size_t>(budget), rng);
        if (std::abs(estimate_purity(set, region) - exact) > 0.1) {
            ++failures;
        }
    }
    INFO("failures " << failures << "/" << n_reps << " at T=" << budget);
    REQUIRE(failures <= 0.1 * n_reps);
}

TEST_CASE("Renyi-2 estimation", "[shadows]") {
    SECTION("product state is near zero") {
        Rng rng(79);
        const ShadowSet set = collect_shadows(
            fixed_state(Statevector::zero_state(3)), 10000, rng);
        const auto est = estimate_renyi2(set, Region({0, 1}));
        REQUIRE(est.value >= 0.0);
        REQUIRE(est.value < 0.1);
    }
    SECTION("maximally mixed single qubit") {
        Rng rng(83);
        const ShadowSet set =
            collect_shadows(fixed_state(bell_pair()), 10000, rng);
        REQUIRE(estimate_renyi2(set, Region({0})).value ==
                Approx(std::log(2.0)).margin(0.1));
    }
    SECTION("clamp engages when the raw estimate exceeds one") {
        ShadowSet set(1, 0);
        set.append_raw(std::vector<std::uint8_t>{4});
        set.append_raw(std::vector<std::uint8_t>{4});
        const auto est = estimate_renyi2(set, Region({0}));
        REQUIRE(est.raw_purity == Approx(5.0));
        REQUIRE(est.clamped);
        REQUIRE(est.value == 0.0);
    }
}

TEST_CASE("median of means", "[shadows]") {
    SECTION("one batch reduces to the plain estimator") {
        Rng rng(89);
        const ShadowSet set = collect_shadows(
            fixed_state(Statevector::zero_state(2)), 500, rng);
        REQUIRE(estimate_purity_mom(set, Region({0}), 1) ==
                Approx(estimate_purity(set, Region({0}))).margin(1e-12));
    }
    SECTION("product state with 10 batches") {
        Rng rng(97);
        const ShadowSet set = collect_shadows(
            fixed_state(Statevector::zero_state(4)), 10000, rng);
        REQUIRE(estimate_purity_mom(set, Region({0, 1}), 10) ==
                Approx(1.0).margin(0.1));
    }
    SECTION("a corrupted batch cannot move the median") {
        Rng rng(101);
        const Statevector state = Statevector::zero_state(3);
        const ShadowSet clean =
            collect_shadows(fixed_state(state), 1100, rng);
        ShadowSet corrupted(clean.n_qubits(), clean.seed());
        for (std::size_t t = 0; t < clean.size(); ++t) {
            std::vector<std::uint8_t> codes(clean.snapshot(t).begin(),
                                            clean.snapshot(t).end());
            if (t < 100) {
                // First batch: identical X-basis records; every pair inside
                // the batch evaluates to 5^k = 125.
                std::fill(codes.begin(), codes.end(),
                          static_cast<std::uint8_t>(0));
            }
            corrupted.append_raw(codes);
        }
        const Region region({0, 1, 2});
        const double robust = estimate_purity_mom(corrupted, region, 11);
        const double plain = estimate_purity(corrupted, region);
        REQUIRE(robust == Approx(1.0).margin(0.25));
        REQUIRE(plain > 1.5); // ruined by the corrupted batch
    }
    SECTION("insufficient snapshots per batch are rejected") {
        Rng rng(103);
        const ShadowSet set = collect_shadows(
            fixed_state(Statevector::zero_state(1)), 10, rng);
        REQUIRE_THROWS_AS(estimate_purity_mom(set, Region({0}), 6),
                          std::invalid_argument);
    }
}
