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

#include <gtest/gtest.h>

#include <random>

#include "support.h"
#include "xchain/oracle.h"
#include "xchain/stabilizer.h"

namespace xchain {
namespace {

Basis span(int n, std::vector<std::initializer_list<int>> sets) {
    std::vector<BitVec> rows;
    for (auto s : sets) {
        rows.push_back(BitVec::of(n, s));
    }
    return Basis::span_of(n, rows);
}

// Expansion over `part` from kets such as "+100"; half_log is the norm.
XBasisExpansion kets(const VertexSet &part, int half_log, std::initializer_list<std::string_view> list) {
    XBasisExpansion e = XBasisExpansion::over(part);
    e.half_log_norm = half_log;
    for (auto k : list) {
        e.insert_unique(BitVec::parse(k.substr(1)).bits(), k[0] == '-' ? -1 : 1);
    }
    return e;
}

bool same_modulo(const Basis &a, const Basis &b, const Basis &gamma) { return sum(a, gamma) == sum(b, gamma); }

const Bipartition kHouseSplit = Bipartition::from_a(5, std::vector<int>{1, 2, 3});

TEST(PartitionGroups, House) {
    PartitionGroups pg = partition_groups(named("house"), kHouseSplit);
    EXPECT_EQ(pg.k_b, span(5, {{4, 5}, {2, 3, 4}}));
    EXPECT_EQ(pg.k_aa, span(5, {{2, 3}}));
    EXPECT_TRUE(pg.k_simb.empty());
    EXPECT_EQ(pg.k_harpoon, span(5, {{2}}));
}

TEST(PartitionGroups, Bistar) {
    PartitionGroups pg = partition_groups(named("bistar"), kHouseSplit);
    EXPECT_TRUE(pg.k_aa.empty());
    EXPECT_TRUE(pg.k_simb.empty());
    EXPECT_TRUE(same_modulo(pg.k_b, span(5, {{1}}), pg.xd.gamma));
    EXPECT_TRUE(same_modulo(pg.k_harpoon, span(5, {{4}}), pg.xd.gamma));
}

TEST(PartitionGroups, DimensionsAddUp) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = testing::random_graph(n, rng);
        Bipartition part = testing::random_bipartition(n, rng);
        PartitionGroups pg = partition_groups(g, part);
        EXPECT_EQ(pg.k_aa.dim() + pg.k_simb.dim() + pg.k_b.dim() + pg.k_harpoon.dim(), n - pg.xd.gamma.dim());
        EXPECT_EQ(sum(sum(pg.a_group(), pg.k_b), pg.k_harpoon), pg.xd.correlation_group());
        for (const auto &x : pg.k_b.elements()) {
            EXPECT_TRUE(correlation_index(g, x).subset_of(part.b));
        }
        for (const auto &x : pg.k_aa.elements()) {
            EXPECT_TRUE(correlation_index(g, x).subset_of(part.a));
            EXPECT_TRUE(x.subset_of(part.a));
        }
        for (const auto &x : pg.k_simb.rows()) {
            EXPECT_TRUE(correlation_index(g, x).subset_of(part.a));
            EXPECT_FALSE(x.subset_of(part.a));
            for (const auto &b : pg.k_b.rows()) {
                EXPECT_FALSE(cut_parity(g, x, b));
            }
        }
    }
}

TEST(PartitionGroups, CanonicalRepresentativesCanLeaveKSimbNonempty) {
    PartitionGroups pg = partition_groups(named("star:3"), Bipartition::from_a(3, std::vector<int>{1, 2}));
    EXPECT_EQ(pg.k_simb, span(3, {{3}}));
    EXPECT_TRUE(pg.k_aa.empty());
    EXPECT_EQ(pg.k_harpoon.dim(), 1);
}

TEST(PartitionGroups, RejectsBadPartitions) {
    Graph g = named("house");
    EXPECT_THROW(partition_groups(g, Bipartition{BitVec::of(5, {1, 2}), BitVec::of(5, {2, 3, 4, 5})}), std::invalid_argument);
    EXPECT_THROW(partition_groups(g, Bipartition{BitVec::of(5, {1, 2}), BitVec::of(5, {3, 4})}), std::invalid_argument);
    EXPECT_THROW(partition_groups(g, Bipartition::from_a(4, std::vector<int>{1})), std::invalid_argument);
}

TEST(SchmidtVectors, HouseTerms) {
    Graph g = named("house");
    PartitionGroups pg = partition_groups(g, kHouseSplit);
    SchmidtTerm t0 = schmidt_vectors(g, pg, BitVec::zero(5));
    EXPECT_EQ(t0.sign, 1);
    EXPECT_EQ(t0.vec_a, kets(kHouseSplit.a, 1, {"+100", "-111"}));
    EXPECT_EQ(t0.vec_b, kets(kHouseSplit.b, 2, {"+00", "-01", "-10", "-11"}));

    SchmidtTerm t2 = schmidt_vectors(g, pg, BitVec::of(5, {2}));
    EXPECT_EQ(t2.sign, 1);
    EXPECT_EQ(t2.vec_a, kets(kHouseSplit.a, 1, {"+001", "+010"}));
    EXPECT_EQ(t2.vec_b, kets(kHouseSplit.b, 2, {"-00", "-01", "-10", "+11"}));
}

TEST(SchmidtVectors, BistarTerm) {
    Graph g = named("bistar");
    PartitionGroups pg = partition_groups(g, kHouseSplit);
    SchmidtTerm t = schmidt_vectors(g, pg, BitVec::of(5, {4}));
    EXPECT_EQ(t.sign, 1);
    EXPECT_EQ(t.vec_a, kets(kHouseSplit.a, 0, {"+111"}));
    EXPECT_EQ(t.vec_b, kets(kHouseSplit.b, 1, {"+00", "-11"}));
    EXPECT_THROW(schmidt_vectors(g, pg, BitVec::of(5, {1})), std::invalid_argument);
}

TEST(SchmidtDecomposition, House) {
    Graph g = named("house");
    SchmidtDecomposition d = schmidt_decomposition(g, kHouseSplit);
    ASSERT_EQ(d.terms.size(), 2u);
    EXPECT_EQ(d.coeff, DyadicReal::make(1, 1));
    EXPECT_EQ(d.alpha, -1);
    EXPECT_EQ(d.terms[0].label, BitVec::zero(5));
    EXPECT_EQ(d.terms[1].label, BitVec::of(5, {2}));
    EXPECT_EQ(dense_from_schmidt(5, d), dense_to_x(dense_state_z(g)));
}

TEST(SchmidtDecomposition, Bistar) {
    Graph g = named("bistar");
    SchmidtDecomposition d = schmidt_decomposition(g, kHouseSplit);
    ASSERT_EQ(d.terms.size(), 2u);
    EXPECT_EQ(d.coeff, DyadicReal::make(1, 1));
    EXPECT_EQ(d.alpha, 1);
    EXPECT_EQ(d.terms[0].vec_a, kets(kHouseSplit.a, 0, {"+000"}));
    EXPECT_EQ(d.terms[0].vec_b, kets(kHouseSplit.b, 1, {"+00", "+11"}));
    EXPECT_EQ(d.terms[1].vec_a, kets(kHouseSplit.a, 0, {"+111"}));
    EXPECT_EQ(d.terms[1].vec_b, kets(kHouseSplit.b, 1, {"+00", "-11"}));
    for (const auto &t : d.terms) {
        EXPECT_EQ(t.sign, 1);
    }
    EXPECT_EQ(dense_from_schmidt(5, d), dense_to_x(dense_state_z(g)));
}

TEST(SchmidtDecomposition, ProductState) {
    Graph g = named("empty:4");
    SchmidtDecomposition d = schmidt_decomposition(g, Bipartition::from_a(4, std::vector<int>{1, 2, 3}));
    ASSERT_EQ(d.terms.size(), 1u);
    EXPECT_EQ(d.coeff, DyadicReal::one());
    EXPECT_EQ(d.terms[0].vec_a.str(), "|000>");
    EXPECT_EQ(d.terms[0].vec_b.str(), "|0>");
}

TEST(SchmidtRankOp, Examples) {
    SchmidtRank house = schmidt_rank(named("house"), kHouseSplit);
    EXPECT_EQ(house.rank, 2u);
    EXPECT_EQ(house.geometric_measure, 1);
    EXPECT_FALSE(house.subset_formula.has_value());

    SchmidtRank empty = schmidt_rank(named("empty:6"), Bipartition::from_a(6, std::vector<int>{2, 5}));
    EXPECT_EQ(empty.rank, 1u);
    EXPECT_EQ(empty.geometric_measure, 0);

    EXPECT_EQ(schmidt_rank(named("bistar"), kHouseSplit).rank, 2u);
    EXPECT_EQ(dense_schmidt_rank(named("bistar"), kHouseSplit), 2u);

    SchmidtRank small = schmidt_rank(named("bistar"), Bipartition::from_a(5, std::vector<int>{4, 5}));
    ASSERT_TRUE(small.subset_formula.has_value());
    EXPECT_EQ(*small.subset_formula, small.log_rank);
}

TEST(SchmidtRankOp, SubsetFormulaDependsOnRepresentatives) {
    Graph g = Graph::from_edges(4, {{1, 2}, {1, 3}});
    SchmidtRank r = schmidt_rank(g, Bipartition::from_a(4, std::vector<int>{1, 2}));
    EXPECT_EQ(r.log_rank, 1);
    EXPECT_EQ(r.local_stabilizer_formula, 1);
    ASSERT_TRUE(r.subset_formula.has_value());
    EXPECT_EQ(*r.subset_formula, 2);
}

void check_orthonormal(const Graph &g, const Bipartition &part) {
    SchmidtDecomposition d = schmidt_decomposition(g, part);
    ASSERT_EQ(d.terms.size(), size_t{1} << d.coeff.half_log);
    for (size_t i = 0; i < d.terms.size(); ++i) {
        for (size_t j = i; j < d.terms.size(); ++j) {
            DyadicReal expected = i == j ? DyadicReal::one() : DyadicReal::zero();
            ASSERT_EQ(inner_product(d.terms[i].vec_a, d.terms[j].vec_a), expected);
            ASSERT_EQ(inner_product(d.terms[i].vec_b, d.terms[j].vec_b), expected);
        }
    }
}

TEST(SchmidtProperties, OrthonormalExhaustiveToFiveVertices) {
    for (int n = 2; n <= 5; ++n) {
        for (const Graph &g : testing::all_graphs(n)) {
            for (const auto &part : testing::all_bipartitions(n)) {
                check_orthonormal(g, part);
            }
        }
    }
}

TEST(SchmidtProperties, OrthonormalSevenVertexSample) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = testing::random_graph(7, rng);
        for (const auto &part : testing::all_bipartitions(7)) {
            check_orthonormal(g, part);
        }
    }
}

TEST(SchmidtProperties, ReconstructionAndRankMatchOracle) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = testing::random_graph(n, rng);
        DenseState x = dense_to_x(dense_state_z(g));
        for (int k = 0; k < 8; ++k) {
            Bipartition part = testing::random_bipartition(n, rng);
            SchmidtDecomposition d = schmidt_decomposition(g, part);
            EXPECT_EQ(dense_from_schmidt(n, d), x);
            EXPECT_EQ(schmidt_rank(g, part).rank, dense_schmidt_rank(g, part));
        }
    }
}

}  // namespace
}  // namespace xchain
