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

#include "xchain/stabilizer.h"

#include <cstdlib>
#include <stdexcept>

#include "xchain/kernels.h"

namespace xchain {

namespace {

void check_width(const Graph &g, const VertexSet &s) {
    if (s.width() != g.n()) {
        throw std::invalid_argument("vertex set width " + std::to_string(s.width()) + " differs from graph size " +
                                    std::to_string(g.n()));
    }
}

}  // namespace

std::string PauliStabilizer::str() const {
    std::string s = phase < 0 ? "-" : "+";
    if (x_set.empty() && z_set.empty()) {
        return s + "I";
    }
    if (!x_set.empty()) {
        s += "X" + x_set.set_str();
    }
    if (!z_set.empty()) {
        s += "Z" + z_set.set_str();
    }
    return s;
}

PauliStabilizer generator(const Graph &g, int v) {
    if (v < 1 || v > g.n()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.n()));
    }
    return {1, BitVec::of(g.n(), {v}), g.neighbors(v)};
}

VertexSet correlation_index(const Graph &g, const VertexSet &xi) {
    check_width(g, xi);
    uint32_t c = 0;
    for (uint32_t rest = xi.bits(); rest; rest &= rest - 1) {
        c ^= g.rows()[std::countr_zero(rest)];
    }
    return BitVec(g.n(), c);
}

int stabilizer_parity(const Graph &g, const VertexSet &xi) {
    check_width(g, xi);
    return kernels::parity(g.rows(), xi.bits());
}

PauliStabilizer induced_stabilizer(const Graph &g, const VertexSet &xi) {
    return {stabilizer_parity(g, xi), xi, correlation_index(g, xi)};
}

bool cut_parity(const Graph &g, const VertexSet &a, const VertexSet &b) {
    check_width(g, b);
    return a.dot(correlation_index(g, b));
}

PauliStabilizer multiply(const Graph &g, const PauliStabilizer &s1, const PauliStabilizer &s2) {
    check_width(g, s1.x_set);
    check_width(g, s1.z_set);
    check_width(g, s2.x_set);
    check_width(g, s2.z_set);
    if (std::abs(s1.phase) != 1 || std::abs(s2.phase) != 1) {
        throw std::logic_error("stabilizer phases must be +1 or -1");
    }
    int phase = s1.phase * s2.phase;
    if (s1.z_set.dot(s2.x_set)) {
        phase = -phase;
    }
    return {phase, s1.x_set ^ s2.x_set, s1.z_set ^ s2.z_set};
}

}  // namespace xchain
