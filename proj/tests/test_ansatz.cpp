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
#include <numbers>

#include "shadowguard/circuit.hpp"
#include "shadowguard/gradient.hpp"
#include "shadowguard/graph.hpp"
#include "shadowguard/models.hpp"
#include "shadowguard/statevector.hpp"

using namespace shadowguard;
using Catch::Approx;

TEST_CASE("circuit construction", "[ansatz]") {
    SECTION("fixed seed reproduces the axes") {
        Rng a(55);
        Rng b(55);
        REQUIRE(build_circuit(4, 3, a).axes == build_circuit(4, 3, b).axes);
    }
    SECTION("shape") {
        Rng rng(1);
        const CircuitSpec circuit = build_circuit(4, 3, rng);
        REQUIRE(circuit.axes.size() == 12);
        REQUIRE(circuit.n_params() == 12);
    }
    SECTION("axes are uniform over {X, Y, Z}") {
        Rng rng(7);
        int counts[3] = {0, 0, 0};
        const int draws = 10000;
        for (int i = 0; i < draws / 12; ++i) {
            for (Pauli p : build_circuit(4, 3, rng).axes) {
                ++counts[static_cast<int>(p)];
            }
        }
        const int total = counts[0] + counts[1] + counts[2];
        for (int c : counts) {
            REQUIRE(std::abs(c / static_cast<double>(total) - 1.0 / 3.0) <
                    0.02);
        }
    }
}

TEST_CASE("state preparation", "[ansatz]") {
    Rng rng(3);
    const CircuitSpec circuit = build_circuit(4, 3, rng);

    SECTION("zero angles give the zero state with no entanglement") {
        const Statevector state =
            prepare_state(circuit, Params::zeros(circuit));
        REQUIRE(std::norm(state.amp(0)) == Approx(1.0));
        REQUIRE(renyi2_exact(state, Region({0, 1})) ==
                Approx(0.0).margin(1e-12));
    }
    SECTION("deterministic given circuit and params") {
        Rng angle_rng(9);
        const Params params = init_small_angle(circuit, 0.5, angle_rng);
        const Statevector a = prepare_state(circuit, params);
        const Statevector b = prepare_state(circuit, params);
        REQUIRE(fidelity(a, b) == Approx(1.0));
    }
    SECTION("norm is one for random angles") {
        Rng angle_rng(11);
        const Params params = init_small_angle(circuit, 1.0, angle_rng);
        REQUIRE(std::abs(prepare_state(circuit, params).norm_sq() - 1.0) <
                1e-10);
    }
    SECTION("known two-qubit marginal") {
        // n=2, p=1, axes [Y, Y], theta = [pi/2, 0]: qubit-0 marginal is
        // maximally mixed after the CZ.
        CircuitSpec c2;
        c2.n_qubits = 2;
        c2.depth = 1;
        c2.axes = {Pauli::Y, Pauli::Y};
        Params params = Params::zeros(c2);
        params.at(0, 0) = std::numbers::pi / 2;
        const Statevector state = prepare_state(c2, params);
        const DensityMatrix rho =
            reduced_density_matrix(state, Region({0}));
        REQUIRE(rho.entries(0, 0).real() == Approx(0.5));
        REQUIRE(rho.entries(1, 1).real() == Approx(0.5));
    }
    SECTION("dimension mismatch is rejected") {
        Params wrong = Params::zeros(circuit);
        wrong.angles.pop_back();
        wrong.depth = circuit.depth;
        REQUIRE_THROWS_AS(prepare_state(circuit, wrong),
                          std::invalid_argument);
    }
    SECTION("gate count: p*n rotations and p*n ring CZs") {
        const auto seq = build_gate_sequence(circuit);
        int rotations = 0;
        int czs = 0;
        for (const auto& op : seq) {
            (op.kind == GateOp::Kind::Rotation ? rotations : czs) += 1;
        }
        REQUIRE(rotations == circuit.n_params());
        REQUIRE(czs == circuit.depth * circuit.n_qubits);
    }
}

TEST_CASE("small-angle initialization", "[ansatz]") {
    Rng rng(13);
    const CircuitSpec circuit = build_circuit(6, 4, rng);

    SECTION("eps = 0 gives zeros") {
        Rng r(1);
        for (double angle : init_small_angle(circuit, 0.0, r).angles) {
            REQUIRE(angle == 0.0);
        }
    }
    SECTION("support bound") {
        Rng r(2);
        const Params params = init_small_angle(circuit, 0.05, r);
        for (double angle : params.angles) {
            REQUIRE(std::abs(angle) < 0.05 * std::numbers::pi);
        }
    }
    SECTION("sample mean is zero") {
        Rng r(3);
        double total = 0.0;
        int count = 0;
        for (int i = 0; i < 4000; ++i) {
            for (double angle : init_small_angle(circuit, 1.0, r).angles) {
                total += angle;
                ++count;
            }
        }
        const double mean = total / count;
        // Uniform on [-pi, pi): s.e. = pi/sqrt(3 count).
        const double stderr_mean =
            std::numbers::pi / std::sqrt(3.0 * count);
        REQUIRE(std::abs(mean) < 3.0 * stderr_mean);
    }
    SECTION("domain") {
        Rng r(4);
        REQUIRE_THROWS_AS(init_small_angle(circuit, -0.1, r),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(init_small_angle(circuit, 1.2, r),
                          std::invalid_argument);
    }
}

TEST_CASE("identity-block initialization", "[ansatz]") {
    SECTION("prepares the zero state exactly") {
        Rng rng(19);
        const CircuitSpec circuit = build_identity_block_circuit(6, 8, rng);
        const Params params = init_identity_block(circuit, rng);
        const Statevector state = prepare_state(circuit, params);
        REQUIRE(fidelity(state, Statevector::zero_state(6)) ==
                Approx(1.0).margin(1e-10));
        REQUIRE(renyi2_exact(state, Region({0, 1})) ==
                Approx(0.0).margin(1e-10));
    }
    SECTION("gradient is not identically zero at the identity point") {
        // Note the model choice: |0...0> is an eigenstate of the Heisenberg
        // chain (the XX+YY terms annihilate it), so any exact-identity
        // initialization has zero gradient there. The identity-block
        // strategy targets models like SYK, where |0...0> is generic.
        Rng h_rng(1);
        const ObservableSum h = syk_hamiltonian(4, 1.0, h_rng);
        int nonzero = 0;
        for (int seed = 0; seed < 5; ++seed) {
            Rng rng(100 + seed);
            const CircuitSpec circuit =
                build_identity_block_circuit(4, 4, rng);
            const Params params = init_identity_block(circuit, rng);
            if (l2_norm(exact_gradient(circuit, params, h)) > 1e-8) {
                ++nonzero;
            }
        }
        REQUIRE(nonzero == 5);
    }
    SECTION("odd depth and plain circuits are rejected") {
        Rng rng(1);
        REQUIRE_THROWS_AS(build_identity_block_circuit(4, 5, rng),
                          std::invalid_argument);
        const CircuitSpec plain = build_circuit(4, 4, rng);
        REQUIRE_THROWS_AS(init_identity_block(plain, rng),
                          std::invalid_argument);
    }
}

TEST_CASE("entropy growth is monotone in eps_theta", "[ansatz][slow]") {
    // Seed-mean S2 of the {0,1} region after p layers, ordered in eps.
    const int n = 8;
    const int n_seeds = 100;
    const std::vector<int> depths{5, 10, 20};
    const std::vector<double> eps_values{0.05, 0.1, 1.0};
    std::vector<std::vector<double>> means(eps_values.size(),
                                           std::vector<double>(depths.size()));
    for (std::size_t e = 0; e < eps_values.size(); ++e) {
        for (std::size_t d = 0; d < depths.size(); ++d) {
            double total = 0.0;
            for (int s = 0; s < n_seeds; ++s) {
                Rng rng = Rng(500).derive(s);
                const CircuitSpec circuit = build_circuit(n, depths[d], rng);
                const Params params =
                    init_small_angle(circuit, eps_values[e], rng);
                total += renyi2_exact(prepare_state(circuit, params),
                                      Region({0, 1}));
            }
            means[e][d] = total / n_seeds;
        }
    }
    for (std::size_t d = 0; d < depths.size(); ++d) {
        REQUIRE(means[0][d] <= means[1][d]);
        REQUIRE(means[1][d] <= means[2][d]);
    }
}
