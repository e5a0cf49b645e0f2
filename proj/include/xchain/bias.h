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

#ifndef XCHAIN_BIAS_H
#define XCHAIN_BIAS_H

#include <cstdint>
#include <vector>

#include "xchain/dyadic.h"
#include "xchain/graph.h"

namespace xchain {

/// beta = <0_X^n|G>: zero when some X-chain generator has odd parity,
/// otherwise alpha * 2^{-(n - dim Gamma)/2}.
DyadicReal bias_degree(const Graph &g);

/// <G|H> = beta(G delta H).
DyadicReal overlap(const Graph &g, const Graph &h);

bool is_balanced(const Graph &g);

/// Number of negative Z-basis amplitudes, 2^{n-1} (1 - beta).
int64_t negative_weight(const Graph &g);

/// One isomorphism class of Z-balanced graphs with an odd-parity X-chain.
struct BalancedClass {
    Graph graph;
    VertexSet witness;
    int witness_edge_count = 0;
};

/// All Z-balanced isomorphism classes on n <= 5 vertices, canonical and
/// sorted by adjacency key.
std::vector<BalancedClass> enumerate_balanced(int n);

/// h = g delta d for a balanced d, so that <G|H> = 0.
Graph orthogonal_partner(const Graph &d, const Graph &g);

}  // namespace xchain

#endif
