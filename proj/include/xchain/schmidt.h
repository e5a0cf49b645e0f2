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

#ifndef XCHAIN_SCHMIDT_H
#define XCHAIN_SCHMIDT_H

#include <cstdint>
#include <optional>
#include <vector>

#include "xchain/dyadic.h"
#include "xchain/expansion.h"
#include "xchain/factorization.h"
#include "xchain/gf2.h"
#include "xchain/graph.h"

namespace xchain {

/// Split of the correlation group W = <K_G> for a bipartition A|B into
///   k_b        {xi in W : c_xi in B}
///   k_aa       {xi in W : c_xi in A, xi in A}
///   k_simb     completion of k_aa inside
///              {xi in W : c_xi in A, cut(xi, beta) = 0 for beta in k_b}
///   k_harpoon  completion of the three above to W.
/// The four spans are independent and sum to W.
struct PartitionGroups {
    Bipartition part;
    XChainData xd;
    Basis k_b;
    Basis k_aa;
    Basis k_simb;
    Basis k_harpoon;

    /// k_aa (+) k_simb: the group summed over on the A side.
    Basis a_group() const { return sum(k_aa, k_simb); }
};

PartitionGroups partition_groups(const Graph &g, const Bipartition &part);
PartitionGroups partition_groups(const Graph &g, const XChainData &xd, const Bipartition &part);

/// One separable term sign * |vec_a> |vec_b>.
struct SchmidtTerm {
    VertexSet label;
    int sign = 1;
    XBasisExpansion vec_a;
    XBasisExpansion vec_b;
};

/// Term for a label xi whose coset modulo the X-chain group meets
/// span(k_harpoon); throws std::invalid_argument otherwise.
SchmidtTerm schmidt_vectors(const Graph &g, const PartitionGroups &pg, const VertexSet &xi);

/// |G> = alpha * coeff * sum_terms sign |vec_a>|vec_b>, coeff = 2^{-k/2}.
struct SchmidtDecomposition {
    Bipartition part;
    DyadicReal coeff;
    std::vector<SchmidtTerm> terms;
    /// Global sign relating the term sum to the graph state.
    int alpha = 1;
};

SchmidtDecomposition schmidt_decomposition(const Graph &g, const Bipartition &part);

struct SchmidtRank {
    uint64_t rank = 1;
    int log_rank = 0;
    int geometric_measure = 0;
    /// |A| - dim k_aa - dim(Gamma ∩ P(A)); set only when |A| <= |B|.
    /// Depends on the choice of correlation representatives and can exceed
    /// log_rank; reported, not asserted.
    std::optional<int> subset_formula;
    /// |A| - log2 #{stabilizers supported on A}; always equals log_rank
    /// (checked, std::logic_error otherwise).
    int local_stabilizer_formula = 0;
};

SchmidtRank schmidt_rank(const Graph &g, const Bipartition &part);

/// Basis of the subsets of `part` (one singleton per vertex).
Basis subsets_of(const VertexSet &part);

}  // namespace xchain

#endif
