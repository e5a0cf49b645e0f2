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

#include "xchain/bias.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "xchain/factorization.h"
#include "xchain/stabilizer.h"

namespace xchain {

namespace {

// First generator with odd induced edge count, if any.
const VertexSet *odd_generator(const Graph &g, const XChainData &xd) {
    for (const auto &gen : xd.generators) {
        if (stabilizer_parity(g, gen) < 0) {
            return &gen;
        }
    }
    return nullptr;
}

}  // namespace

DyadicReal bias_degree(const Graph &g) {
    XChainData xd = factorize(g);
    if (!xd.x_gamma.empty()) {
        return DyadicReal::zero();
    }
    return DyadicReal::make(xd.require_alpha(), static_cast<int>(xd.kappa.size()));
}

DyadicReal overlap(const Graph &g, const Graph &h) { return bias_degree(graph_symmetric_difference(g, h)); }

bool is_balanced(const Graph &g) { return !factorize(g).x_gamma.empty(); }

int64_t negative_weight(const Graph &g) {
    if (g.n() > 20) {
        throw std::invalid_argument("negative_weight is limited to n <= 20");
    }
    DyadicReal beta = bias_degree(g);
    int64_t half = int64_t{1} << (g.n() - 1);
    if (beta.is_zero()) {
        return half;
    }
    if (beta.half_log % 2 != 0 || beta.half_log / 2 > g.n() - 1) {
        throw std::logic_error("bias degree " + beta.str() + " gives a non-integer negative weight");
    }
    return half - beta.sign * (half >> (beta.half_log / 2));
}

std::vector<BalancedClass> enumerate_balanced(int n) {
    if (n < 1 || n > 5) {
        throw std::invalid_argument("enumerate_balanced is limited to 1 <= n <= 5");
    }
    std::vector<Edge> slots;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            slots.emplace_back(u, v);
        }
    }
    const int64_t total = int64_t{1} << slots.size();
    std::vector<std::string> keys(total);
#pragma omp parallel for schedule(dynamic, 16)
    for (int64_t code = 0; code < total; ++code) {
        std::vector<Edge> edges;
        for (size_t s = 0; s < slots.size(); ++s) {
            if ((code >> s) & 1) {
                edges.push_back(slots[s]);
            }
        }
        Graph g = Graph::from_edges(n, edges);
        if (is_balanced(g)) {
            keys[code] = adjacency_key(canonical_form(g).graph);
        }
    }
    std::map<std::string, BalancedClass> classes;
    for (int64_t code = 0; code < total; ++code) {
        if (keys[code].empty() || classes.count(keys[code])) {
            continue;
        }
        std::vector<Edge> edges;
        for (size_t s = 0; s < slots.size(); ++s) {
            if (keys[code][s] == '1') {
                edges.push_back(slots[s]);
            }
        }
        Graph canon = Graph::from_edges(n, edges);
        XChainData xd = factorize(canon);
        const VertexSet *w = odd_generator(canon, xd);
        if (w == nullptr) {
            throw std::logic_error("balanced graph without an odd-parity X-chain");
        }
        int edge_count = 0;
        for (auto [u, v] : canon.edges()) {
            edge_count += w->has(u) && w->has(v);
        }
        classes.emplace(keys[code], BalancedClass{canon, *w, edge_count});
    }
    std::vector<BalancedClass> out;
    for (auto &[key, cls] : classes) {
        out.push_back(std::move(cls));
    }
    return out;
}

Graph orthogonal_partner(const Graph &d, const Graph &g) {
    if (!is_balanced(d)) {
        throw std::invalid_argument("orthogonal_partner needs a Z-balanced difference graph");
    }
    return graph_symmetric_difference(g, d);
}

}  // namespace xchain
