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

#ifndef XCHAIN_EXPANSION_H
#define XCHAIN_EXPANSION_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "xchain/dyadic.h"
#include "xchain/gf2.h"

namespace xchain {

/// Exact signed expansion 2^{-half_log_norm/2} * sum_k sign_k |k> in the X
/// basis (|0> = |+>, |1> = |->). Key bit j refers to qubits[j]; kets are
/// printed in qubit order.
struct XBasisExpansion {
    std::vector<int> qubits;
    int half_log_norm = 0;
    std::map<uint32_t, int> terms;

    /// Expansion over vertices 1..n.
    static XBasisExpansion over(int n);
    /// Expansion over the sorted vertices of `part`.
    static XBasisExpansion over(const VertexSet &part);

    size_t size() const { return terms.size(); }
    /// Adds sign at key; throws std::logic_error if the key is present.
    void insert_unique(uint32_t key, int sign);
    XBasisExpansion negated() const;

    /// Ket label for a key, e.g. "1000".
    std::string ket(uint32_t key) const;
    /// "1/2(|1000> + |0010> + |0101> - |1111>)"
    std::string str() const;

    bool operator==(const XBasisExpansion &o) const = default;
};

/// Exact real inner product of two expansions on the same qubits.
DyadicReal inner_product(const XBasisExpansion &a, const XBasisExpansion &b);

/// Restricts a full-width mask to the positions of `part` (bit j of the
/// result is the j-th smallest vertex of part).
uint32_t restrict_to(uint32_t mask, const VertexSet &part);
/// Inverse of restrict_to.
uint32_t embed_from(uint32_t local, const VertexSet &part);

/// Prefactor 2^{-m/2} rendered as "", "1/sqrt2", "1/2", "1/(2sqrt2)", ...
std::string scale_prefix(int half_log);

}  // namespace xchain

#endif
