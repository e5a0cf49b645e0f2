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

#include "xchain/schmidt.h"

#include <stdexcept>
#include <string>

#include "xchain/stabilizer.h"

namespace xchain {

namespace {

void check_partition(const Graph &g, const Bipartition &part) {
    if (part.a.width() != g.n() || part.b.width() != g.n()) {
        throw std::invalid_argument("bipartition width differs from graph size");
    }
    if (!(part.a & part.b).empty() || (part.a | part.b) != g.all() || part.a.empty() || part.b.empty()) {
        throw std::invalid_argument("invalid bipartition " + part.a.set_str() + "|" + part.b.set_str());
    }
}

std::vector<BitVec> singletons(int n, const std::vector<int> &vertices, const VertexSet *within = nullptr) {
    std::vector<BitVec> out;
    for (int v : vertices) {
        if (within == nullptr || within->has(v)) {
            out.push_back(BitVec::of(n, {v}));
        }
    }
    return out;
}

// Functionals xi -> bit u of c_xi, for u in `side`.
std::vector<BitVec> correlation_bits_on(const Graph &g, const VertexSet &side) {
    std::vector<BitVec> out;
    for (int u : side.vertices()) {
        out.push_back(g.neighbors(u));
    }
    return out;
}

}  // namespace

Basis subsets_of(const VertexSet &part) { return Basis::span_of(part.width(), singletons(part.width(), part.vertices())); }

PartitionGroups partition_groups(const Graph &g, const Bipartition &part) {
    return partition_groups(g, factorize(g), part);
}

PartitionGroups partition_groups(const Graph &g, const XChainData &xd, const Bipartition &part) {
    check_partition(g, part);
    const int n = g.n();
    PartitionGroups pg{part, xd, {}, {}, {}, {}};
    const auto w_domain = singletons(n, xd.kappa);
    const Basis w = Basis::span_of(n, w_domain);

    pg.k_b = kernel_of_functionals(n, w_domain, correlation_bits_on(g, part.a));
    pg.k_aa = kernel_of_functionals(n, singletons(n, xd.kappa, &part.a), correlation_bits_on(g, part.b));

    auto u_constraints = correlation_bits_on(g, part.b);
    for (const auto &beta : pg.k_b.rows()) {
        u_constraints.push_back(correlation_index(g, beta));
    }
    Basis u = kernel_of_functionals(n, w_domain, u_constraints);
    pg.k_simb = complement_basis(pg.k_aa, u);
    pg.k_harpoon = complement_basis(sum(sum(pg.k_aa, pg.k_simb), pg.k_b), w);
    return pg;
}

SchmidtTerm schmidt_vectors(const Graph &g, const PartitionGroups &pg, const VertexSet &xi) {
    if (!sum(pg.k_harpoon, pg.xd.gamma).contains(xi)) {
        throw std::invalid_argument("label " + xi.set_str() + " is not in the (A->B)-correlation group " +
                                    pg.k_harpoon.str());
    }
    SchmidtTerm t;
    t.label = xi;
    t.sign = xchain_state(g, pg.xd, xi).sign;

    Basis a_group = pg.a_group();
    t.vec_a = XBasisExpansion::over(pg.part.a);
    t.vec_a.half_log_norm = a_group.dim();
    for (uint64_t code = 0; code < (uint64_t{1} << a_group.dim()); ++code) {
        XChainState s = xchain_state(g, pg.xd, xi ^ a_group.combine(code));
        t.vec_a.insert_unique(restrict_to(s.bits.bits(), pg.part.a), s.sign);
    }

    t.vec_b = XBasisExpansion::over(pg.part.b);
    t.vec_b.half_log_norm = pg.k_b.dim();
    for (uint64_t code = 0; code < (uint64_t{1} << pg.k_b.dim()); ++code) {
        XChainState s = xchain_state(g, pg.xd, xi ^ pg.k_b.combine(code));
        t.vec_b.insert_unique(restrict_to(s.bits.bits(), pg.part.b), s.sign);
    }
    return t;
}

SchmidtDecomposition schmidt_decomposition(const Graph &g, const Bipartition &part) {
    PartitionGroups pg = partition_groups(g, part);
    SchmidtDecomposition d;
    d.part = part;
    d.coeff = DyadicReal::make(1, pg.k_harpoon.dim());
    d.alpha = pg.xd.alpha ? *pg.xd.alpha : global_sign(g, pg.xd);
    for (const auto &xi : pg.k_harpoon.elements()) {
        d.terms.push_back(schmidt_vectors(g, pg, xi));
    }
    return d;
}

SchmidtRank schmidt_rank(const Graph &g, const Bipartition &part) {
    PartitionGroups pg = partition_groups(g, part);
    SchmidtRank r;
    r.log_rank = pg.k_harpoon.dim();
    r.geometric_measure = r.log_rank;
    r.rank = uint64_t{1} << r.log_rank;
    const int size_a = part.a.count();
    if (size_a <= part.b.count()) {
        r.subset_formula = size_a - pg.k_aa.dim() - intersect(pg.xd.gamma, subsets_of(part.a)).dim();
    }
    const int n = g.n();
    Basis local = kernel_of_functionals(n, singletons(n, part.a.vertices()), correlation_bits_on(g, part.b));
    r.local_stabilizer_formula = size_a - local.dim();
    if (r.local_stabilizer_formula != r.log_rank) {
        throw std::logic_error("Schmidt rank " + std::to_string(r.log_rank) + " disagrees with the local stabilizer count " +
                               std::to_string(r.local_stabilizer_formula));
    }
    return r;
}

}  // namespace xchain
