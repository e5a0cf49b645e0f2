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

#ifndef XCHAIN_ORACLE_H
#define XCHAIN_ORACLE_H

#include <cstdint>
#include <map>
#include <vector>

#include "xchain/dyadic.h"
#include "xchain/expansion.h"
#include "xchain/graph.h"
#include "xchain/schmidt.h"
#include "xchain/stabilizer.h"

namespace xchain {

constexpr int kMaxDenseQubits = 14;

enum class Frame { Z, X };

/// Exact dense state amps * 2^{-scale/2}; index bit j-1 is vertex j.
struct DenseState {
    int n = 0;
    std::vector<int64_t> amps;
    int scale = 0;
    Frame frame = Frame::Z;

    /// Sum of squared amplitudes; equals 2^scale for a unit vector.
    int64_t norm2() const;
    bool is_unit() const;
    /// Removes common factors of two so equal states compare equal.
    DenseState normalized() const;
    bool operator==(const DenseState &o) const = default;
};

DenseState dense_state_z(const Graph &g);
/// n-fold Hadamard between the Z and X frames.
DenseState dense_to_x(const DenseState &s);
DenseState dense_to_z(const DenseState &s);

DenseState apply_pauli(const DenseState &s, const PauliStabilizer &p);
bool check_stabilizer(const DenseState &s, const PauliStabilizer &p);

DyadicReal dense_overlap(const Graph &g, const Graph &h);
uint64_t dense_schmidt_rank(const Graph &g, const Bipartition &part);

/// All X-chains by enumeration, sorted by mask.
std::vector<VertexSet> brute_xchains(const Graph &g);

/// Born distribution of an X-basis measurement, nonzero entries only.
std::map<uint32_t, DyadicFraction> x_distribution(const Graph &g);

/// X-frame dense state of an expansion over vertices 1..n.
DenseState dense_from_expansion(const XBasisExpansion &e);
/// X-frame dense state alpha * coeff * sum sign |vec_a>|vec_b>.
DenseState dense_from_schmidt(int n, const SchmidtDecomposition &d);

}  // namespace xchain

#endif
