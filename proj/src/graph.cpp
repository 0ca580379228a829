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
#include "shadowguard/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace shadowguard {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list)
    : n_vertices(n), edges(std::move(edge_list)) {
    if (n <= 0) {
        throw std::invalid_argument("Graph: n_vertices must be positive");
    }
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : edges) {
        if (a > b) {
            std::swap(a, b);
        }
        if (a == b) {
            throw std::invalid_argument("Graph: self-loop");
        }
        if (a < 0 || b >= n) {
            throw std::invalid_argument("Graph: vertex out of range");
        }
        if (!seen.insert({a, b}).second) {
            throw std::invalid_argument("Graph: duplicate edge");
        }
    }
    std::sort(edges.begin(), edges.end());
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_vertices, 0);
    for (const auto& [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

Graph ring_graph(int n) {
    if (n < 3) {
        throw std::invalid_argument("ring_graph: need n >= 3");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, std::move(edges));
}

Graph chain_graph(int n) {
    if (n < 2) {
        throw std::invalid_argument("chain_graph: need n >= 2");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(n, std::move(edges));
}

Graph random_regular_graph(int n, int degree, Rng& rng) {
    if (degree < 1 || n <= degree) {
        throw std::invalid_argument("random_regular_graph: need n > degree >= 1");
    }
    if ((static_cast<long long>(n) * degree) % 2 != 0) {
        throw std::invalid_argument(
            "random_regular_graph: n*degree must be even");
    }
    constexpr int kMaxAttempts = 100000;
    std::vector<int> stubs(static_cast<std::size_t>(n) * degree);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        for (int v = 0; v < n; ++v) {
            for (int d = 0; d < degree; ++d) {
                stubs[static_cast<std::size_t>(v) * degree + d] = v;
            }
        }
        // Fisher-Yates shuffle, then pair consecutive stubs.
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            const std::size_t j = rng.uniform_below(i + 1);
            std::swap(stubs[i], stubs[j]);
        }
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            int a = stubs[i];
            int b = stubs[i + 1];
            if (a == b) {
                ok = false;
                break;
            }
            if (a > b) {
                std::swap(a, b);
            }
            if (!seen.insert({a, b}).second) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return Graph(n, {seen.begin(), seen.end()});
        }
    }
    throw std::runtime_error(
        "random_regular_graph: pairing model failed to converge");
}

} // namespace shadowguard
