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

#include <utility>
#include <vector>

#include "shadowguard/rng.hpp"

namespace shadowguard {

/// Simple undirected graph: no self-loops, no duplicate edges.
struct Graph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges; // stored with first < second

    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    std::vector<int> degrees() const;
};

/// Cycle 0-1-...-(n-1)-0; requires n >= 3.
Graph ring_graph(int n);

/// Open path 0-1-...-(n-1); requires n >= 2.
Graph chain_graph(int n);

/**
 * @brief Uniform-ish d-regular simple graph via the pairing (configuration)
 * model, restarting from scratch whenever a loop or multi-edge appears.
 *
 * Requires n > degree and n*degree even.
 */
Graph random_regular_graph(int n, int degree, Rng& rng);

} // namespace shadowguard
