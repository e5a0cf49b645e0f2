// Copyright 2026 The xchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef XCHAIN_TESTS_SUPPORT_H
#define XCHAIN_TESTS_SUPPORT_H

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "xchain/graph.h"

namespace xchain::testing {

inline std::vector<Edge> edge_slots(int n) {
    std::vector<Edge> slots;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            slots.emplace_back(u, v);
        }
    }
    return slots;
}

/// Graph whose edge set is selected by the bits of `code` over edge_slots(n).
inline Graph graph_from_code(int n, uint64_t code) {
    std::vector<Edge> edges;
    auto slots = edge_slots(n);
    for (size_t s = 0; s < slots.size(); ++s) {
        if ((code >> s) & 1) {
            edges.push_back(slots[s]);
        }
    }
    return Graph::from_edges(n, edges);
}

inline std::vector<Graph> all_graphs(int n) {
    std::vector<Graph> out;
    const uint64_t total = uint64_t{1} << (n * (n - 1) / 2);
    for (uint64_t code = 0; code < total; ++code) {
        out.push_back(graph_from_code(n, code));
    }
    return out;
}

inline Graph random_graph(int n, std::mt19937_64 &rng, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (auto e : edge_slots(n)) {
        if (coin(rng)) {
            edges.push_back(e);
        }
    }
    return Graph::from_edges(n, edges);
}

/// Random A with both sides nonempty.
inline Bipartition random_bipartition(int n, std::mt19937_64 &rng) {
    const uint32_t full = (uint32_t{1} << n) - 1;
    std::uniform_int_distribution<uint32_t> pick(1, full - 1);
    return Bipartition::from_a(n, BitVec(n, pick(rng)));
}

inline std::vector<Bipartition> all_bipartitions(int n) {
    std::vector<Bipartition> out;
    const uint32_t full = (uint32_t{1} << n) - 1;
    for (uint32_t a = 1; a < full; ++a) {
        out.push_back(Bipartition::from_a(n, BitVec(n, a)));
    }
    return out;
}

/// Every vector of the span of `rows`, as a sorted list.
inline std::vector<uint32_t> span_elements(const std::vector<BitVec> &rows) {
    std::vector<uint32_t> out{0};
    for (const auto &r : rows) {
        const size_t size = out.size();
        bool fresh = std::find(out.begin(), out.end(), r.bits()) == out.end();
        if (!fresh) {
            continue;
        }
        for (size_t i = 0; i < size; ++i) {
            out.push_back(out[i] ^ r.bits());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace xchain::testing

#endif
