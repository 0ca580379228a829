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
#include "shadowguard/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace shadowguard {

Eigen::MatrixXcd pauli_term_to_dense(const PauliTerm& term, int n_qubits) {
    return observable_to_dense(ObservableSum::unchecked({term}), n_qubits);
}

Eigen::MatrixXcd observable_to_dense(const ObservableSum& obs, int n_qubits) {
    if (obs.max_qubit() >= n_qubits) {
        throw std::invalid_argument(
            "observable_to_dense: observable acts outside the register");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    Eigen::MatrixXcd matrix = Eigen::MatrixXcd::Zero(dim, dim);
    Statevector column = Statevector::zero_state(n_qubits);
    for (std::size_t j = 0; j < dim; ++j) {
        auto amps = column.amplitudes();
        std::fill(amps.begin(), amps.end(), std::complex<double>{0.0, 0.0});
        amps[j] = std::complex<double>{1.0, 0.0};
        const Statevector image = apply_observable(obs, column);
        for (std::size_t i = 0; i < dim; ++i) {
            matrix(i, j) = image.amp(i);
        }
    }
    return matrix;
}

GroundState ground_state_dense(const ObservableSum& obs, int n_qubits) {
    if (n_qubits < 1 || n_qubits > 12) {
        throw std::invalid_argument(
            "ground_state_dense: n_qubits must be in [1, 12]");
    }
    const Eigen::MatrixXcd matrix = observable_to_dense(obs, n_qubits);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("ground_state_dense: eigensolver failed");
    }
    const double energy = solver.eigenvalues()(0);
    const Eigen::VectorXcd vec = solver.eigenvectors().col(0);

    const double residual = (matrix * vec - energy * vec).norm();
    if (residual >= 1e-8) {
        throw std::runtime_error(
            "ground_state_dense: eigenpair residual exceeds 1e-8");
    }

    GroundState result{energy, Statevector::zero_state(n_qubits)};
    for (std::size_t i = 0; i < result.state.dim(); ++i) {
        result.state.amp(i) = vec(i);
    }
    return result;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.k_qubits != b.k_qubits) {
        throw std::invalid_argument("trace_distance: dimension mismatch");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        a.entries - b.entries, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

} // namespace shadowguard
