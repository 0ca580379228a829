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
#include <string>
#include <utility>
#include <vector>

namespace shadowguard {

enum class Pauli : std::uint8_t { X = 0, Y = 1, Z = 2 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/**
 * @brief A weighted Pauli string: coefficient * prod_q sigma^{a_q}_q.
 *
 * Canonical form: support sorted by qubit index, no duplicates, any phase
 * folded into the coefficient. Qubits absent from the support carry the
 * identity; an empty support is the identity operator.
 */
struct PauliTerm {
    std::complex<double> coefficient{1.0, 0.0};
    std::vector<std::pair<int, Pauli>> support;

    PauliTerm() = default;
    PauliTerm(std::complex<double> coeff,
              std::vector<std::pair<int, Pauli>> ops);

    static PauliTerm identity(std::complex<double> coeff = 1.0);
    static PauliTerm single(int qubit, Pauli p,
                            std::complex<double> coeff = 1.0);

    int weight() const { return static_cast<int>(support.size()); }
    /// Largest qubit index touched, or -1 for the identity term.
    int max_qubit() const;

    /// Support rendered as e.g. "X0 Z3"; empty string for the identity.
    std::string support_string() const;
};

/// Product of two canonical terms, phases folded (e.g. X0 * Y0 = i Z0).
PauliTerm pauli_multiply(const PauliTerm& a, const PauliTerm& b);

/**
 * @brief Hermitian operator as a canonical sum of Pauli strings.
 *
 * Construction merges terms with identical support, drops coefficients
 * below 1e-12 and verifies that every surviving coefficient is real to
 * within 1e-12 (a Pauli-string sum is Hermitian iff its canonical
 * coefficients are real).
 */
class ObservableSum {
  public:
    ObservableSum() = default;
    explicit ObservableSum(std::vector<PauliTerm> terms);

    /// Canonicalizes but skips the Hermiticity validation.
    static ObservableSum unchecked(std::vector<PauliTerm> terms);

    const std::vector<PauliTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    /// Locality k: largest support size over terms (0 for empty sums).
    int locality() const;
    int max_qubit() const;

    static constexpr double kMergeTolerance = 1e-12;

  private:
    void canonicalize();
    void validate_hermitian() const;

    std::vector<PauliTerm> terms_;
};

} // namespace shadowguard
