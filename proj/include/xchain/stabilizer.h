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

#ifndef XCHAIN_STABILIZER_H
#define XCHAIN_STABILIZER_H

#include <string>

#include "xchain/gf2.h"
#include "xchain/graph.h"

namespace xchain {

/// phase * X^{x_set} * Z^{z_set}, X factors written to the left of Z factors.
struct PauliStabilizer {
    int phase = 1;
    VertexSet x_set;
    VertexSet z_set;

    static PauliStabilizer identity(int n) { return {1, BitVec::zero(n), BitVec::zero(n)}; }
    int width() const { return x_set.width(); }
    std::string str() const;
    bool operator==(const PauliStabilizer &o) const = default;
};

/// g_v = X_v Z_{N_v}.
PauliStabilizer generator(const Graph &g, int v);

/// c_xi: symmetric difference of the neighbourhoods of xi's vertices, A_G xi.
VertexSet correlation_index(const Graph &g, const VertexSet &xi);

/// (-1)^{|E(G[xi])|}.
int stabilizer_parity(const Graph &g, const VertexSet &xi);

/// Product of the generators over xi in normal form:
/// parity(xi) * X^{xi} * Z^{c_xi}.
PauliStabilizer induced_stabilizer(const Graph &g, const VertexSet &xi);

/// a^T A_G b mod 2.
bool cut_parity(const Graph &g, const VertexSet &a, const VertexSet &b);

/// Product s1 * s2 reordered into X-left-of-Z normal form. Commuting X^{x2}
/// past Z^{z1} contributes (-1)^{|z1 & x2|}, which for induced stabilizers is
/// (-1)^{cut_parity(xi1, xi2)}.
PauliStabilizer multiply(const Graph &g, const PauliStabilizer &s1, const PauliStabilizer &s2);

}  // namespace xchain

#endif
