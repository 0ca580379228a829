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
#include "shadowguard/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace shadowguard {

namespace {

using Complex = std::complex<double>;

// sigma_a sigma_b = delta_ab I + i eps_abc sigma_c, encoded as
// (result, phase) for a != b; a == b collapses to the identity.
struct SingleProduct {
    bool is_identity;
    Pauli result;
    Complex phase;
};

SingleProduct multiply_single(Pauli a, Pauli b) {
    if (a == b) {
        return {true, Pauli::X, Complex(1.0, 0.0)};
    }
    const int ia = static_cast<int>(a);
    const int ib = static_cast<int>(b);
    // The Pauli not equal to a or b.
    const auto c = static_cast<Pauli>(3 - ia - ib);
    // Cyclic (X->Y->Z->X) products carry +i, anticyclic -i.
    const bool cyclic = (ib == (ia + 1) % 3);
    return {false, c, cyclic ? Complex(0.0, 1.0) : Complex(0.0, -1.0)};
}

} // namespace

char pauli_char(Pauli p) {
    switch (p) {
    case Pauli::X:
        return 'X';
    case Pauli::Y:
        return 'Y';
    case Pauli::Z:
        return 'Z';
    }
    throw std::logic_error("pauli_char: invalid enum value");
}

Pauli pauli_from_char(char c) {
    switch (c) {
    case 'X':
        return Pauli::X;
    case 'Y':
        return Pauli::Y;
    case 'Z':
        return Pauli::Z;
    default:
        throw std::invalid_argument(std::string("not a Pauli letter: ") + c);
    }
}

PauliTerm::PauliTerm(Complex coeff, std::vector<std::pair<int, Pauli>> ops)
    : coefficient(coeff), support(std::move(ops)) {
    std::sort(support.begin(), support.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < support.size(); ++i) {
        if (support[i].first == support[i + 1].first) {
            throw std::invalid_argument(
                "PauliTerm: duplicate qubit in support");
        }
    }
    for (const auto& [q, p] : support) {
        (void)p;
        if (q < 0) {
            throw std::invalid_argument("PauliTerm: negative qubit index");
        }
    }
}

PauliTerm PauliTerm::identity(Complex coeff) { return PauliTerm(coeff, {}); }

PauliTerm PauliTerm::single(int qubit, Pauli p, Complex coeff) {
    return PauliTerm(coeff, {{qubit, p}});
}

int PauliTerm::max_qubit() const {
    return support.empty() ? -1 : support.back().first;
}

std::string PauliTerm::support_string() const {
    std::string out;
    for (const auto& [q, p] : support) {
        if (!out.empty()) {
            out += ' ';
        }
        out += pauli_char(p);
        out += std::to_string(q);
    }
    return out;
}

PauliTerm pauli_multiply(const PauliTerm& a, const PauliTerm& b) {
    std::vector<std::pair<int, Pauli>> support;
    support.reserve(a.support.size() + b.support.size());
    Complex coeff = a.coefficient * b.coefficient;

    std::size_t ia = 0;
    std::size_t ib = 0;
    while (ia < a.support.size() || ib < b.support.size()) {
        if (ib == b.support.size() ||
            (ia < a.support.size() &&
             a.support[ia].first < b.support[ib].first)) {
            support.push_back(a.support[ia++]);
        } else if (ia == a.support.size() ||
                   b.support[ib].first < a.support[ia].first) {
            support.push_back(b.support[ib++]);
        } else {
            const int q = a.support[ia].first;
            const auto prod =
                multiply_single(a.support[ia].second, b.support[ib].second);
            if (!prod.is_identity) {
                coeff *= prod.phase;
                support.emplace_back(q, prod.result);
            }
            ++ia;
            ++ib;
        }
    }
    return PauliTerm(coeff, std::move(support));
}

ObservableSum::ObservableSum(std::vector<PauliTerm> terms)
    : terms_(std::move(terms)) {
    canonicalize();
    validate_hermitian();
}

ObservableSum ObservableSum::unchecked(std::vector<PauliTerm> terms) {
    ObservableSum sum;
    sum.terms_ = std::move(terms);
    sum.canonicalize();
    return sum;
}

void ObservableSum::canonicalize() {
    std::map<std::vector<std::pair<int, Pauli>>, Complex> merged;
    for (auto& term : terms_) {
        merged[term.support] += term.coefficient;
    }
    terms_.clear();
    terms_.reserve(merged.size());
    for (auto& [support, coeff] : merged) {
        if (std::abs(coeff) < kMergeTolerance) {
            continue;
        }
        terms_.emplace_back(coeff, support);
    }
}

void ObservableSum::validate_hermitian() const {
    for (const auto& term : terms_) {
        if (std::abs(term.coefficient.imag()) >= kMergeTolerance) {
            throw std::invalid_argument(
                "ObservableSum: non-Hermitian (imaginary coefficient on " +
                (term.support.empty() ? std::string("identity")
                                      : term.support_string()) +
                ")");
        }
    }
}

int ObservableSum::locality() const {
    int k = 0;
    for (const auto& term : terms_) {
        k = std::max(k, term.weight());
    }
    return k;
}

int ObservableSum::max_qubit() const {
    int q = -1;
    for (const auto& term : terms_) {
        q = std::max(q, term.max_qubit());
    }
    return q;
}

} // namespace shadowguard
