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
#include "shadowguard/models.hpp"

#include <cmath>
#include <stdexcept>

namespace shadowguard {

ObservableSum heisenberg_graph(const Graph& graph, double coupling,
                               double field) {
    std::vector<PauliTerm> terms;
    terms.reserve(3 * graph.edges.size() + graph.n_vertices);
    for (const auto& [a, b] : graph.edges) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            terms.emplace_back(coupling,
                               std::vector<std::pair<int, Pauli>>{{a, p},
                                                                  {b, p}});
        }
    }
    for (int i = 0; i < graph.n_vertices; ++i) {
        terms.push_back(PauliTerm::single(i, Pauli::Z, field));
    }
    return ObservableSum(std::move(terms));
}

ObservableSum ising_chain(int n_qubits, double coupling) {
    if (n_qubits < 2) {
        throw std::invalid_argument("ising_chain: need n >= 2");
    }
    std::vector<PauliTerm> terms;
    terms.reserve(n_qubits - 1);
    for (int i = 0; i + 1 < n_qubits; ++i) {
        terms.emplace_back(-coupling, std::vector<std::pair<int, Pauli>>{
                                          {i, Pauli::Z}, {i + 1, Pauli::Z}});
    }
    return ObservableSum(std::move(terms));
}

PauliTerm jw_majorana(int majorana_index, int n_qubits) {
    const int n_majoranas = 2 * n_qubits;
    if (majorana_index < 1 || majorana_index > n_majoranas) {
        throw std::invalid_argument("jw_majorana: index out of range");
    }
    const int site = (majorana_index + 1) / 2; // 1-based qubit site
    std::vector<std::pair<int, Pauli>> support;
    support.reserve(site);
    for (int q = 0; q < site - 1; ++q) {
        support.emplace_back(q, Pauli::X);
    }
    support.emplace_back(site - 1,
                         majorana_index % 2 == 0 ? Pauli::Y : Pauli::Z);
    return PauliTerm(1.0 / std::sqrt(2.0), std::move(support));
}

double syk_coupling_stddev(int n_qubits, double coupling) {
    const double n = n_qubits;
    const double variance =
        6.0 * coupling * coupling / ((n - 1.0) * (n - 2.0) * (n - 3.0));
    return std::sqrt(variance);
}

ObservableSum syk_hamiltonian(int n_qubits, double coupling, Rng& rng) {
    if (n_qubits < 4) {
        throw std::invalid_argument("syk_hamiltonian: need n_qubits >= 4");
    }
    const int m = 2 * n_qubits;
    const double sigma = syk_coupling_stddev(n_qubits, coupling);

    std::vector<PauliTerm> majoranas;
    majoranas.reserve(m);
    for (int idx = 1; idx <= m; ++idx) {
        majoranas.push_back(jw_majorana(idx, n_qubits));
    }

    std::vector<PauliTerm> terms;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const PauliTerm ij = pauli_multiply(majoranas[i], majoranas[j]);
            for (int k = j + 1; k < m; ++k) {
                const PauliTerm ijk = pauli_multiply(ij, majoranas[k]);
                for (int l = k + 1; l < m; ++l) {
                    PauliTerm quartic = pauli_multiply(ijk, majoranas[l]);
                    quartic.coefficient *= rng.gaussian(0.0, sigma);
                    terms.push_back(std::move(quartic));
                }
            }
        }
    }
    try {
        return ObservableSum(std::move(terms));
    } catch (const std::invalid_argument&) {
        throw std::runtime_error(
            "syk_hamiltonian: expansion produced an imaginary coefficient "
            "(Jordan-Wigner phase bug)");
    }
}

} // namespace shadowguard
