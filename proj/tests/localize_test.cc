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

#include "xchain/localize.h"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "support.h"
#include "xchain/oracle.h"

namespace xchain {
namespace {

const Bipartition kSplit = Bipartition::from_a(5, std::vector<int>{1, 2, 3});

bool same_label(const Graph &g, const VertexSet &a, const VertexSet &b) {
    return xchain_group(g).contains(a ^ b);
}

TEST(ExtractCode, Bistar) {
    Graph g = named("bistar");
    LocalizationCode code = extract_code(g, kSplit);
    ASSERT_EQ(code.codewords.size(), 2u);
    EXPECT_EQ(code.codewords[0].label, BitVec::zero(5));
    EXPECT_EQ(word_str(code.codewords[0].word, 3), "000");
    EXPECT_TRUE(same_label(g, code.codewords[1].label, BitVec::of(5, {4})));
    EXPECT_EQ(word_str(code.codewords[1].word, 3), "111");
    EXPECT_EQ(code.distance, 3);
    EXPECT_EQ(code.correctable(), 1);
}

TEST(ExtractCode, SingleCodewordSentinel) {
    LocalizationCode code = extract_code(named("empty:4"), Bipartition::from_a(4, std::vector<int>{1, 3}));
    EXPECT_EQ(code.codewords.size(), 1u);
    EXPECT_EQ(code.distance, 3);
}

TEST(ExtractCode, RejectsSuperposedSchmidtVectors) {
    try {
        extract_code(named("house"), kSplit);
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("k_aa"), std::string::npos);
    }
    EXPECT_THROW(extract_code(named("star:3"), Bipartition::from_a(3, std::vector<int>{1, 2})), std::invalid_argument);
}

TEST(Decode, Examples) {
    Graph g = named("bistar");
    LocalizationCode code = extract_code(g, kSplit);
    Decoded d = decode(code, 0b011);  // 110
    ASSERT_TRUE(d.ok());
    EXPECT_EQ(word_str(d.codeword->word, 3), "111");
    EXPECT_TRUE(same_label(g, d.codeword->label, BitVec::of(5, {4})));
    EXPECT_EQ(d.flips, 1);

    d = decode(code, 0b111);
    EXPECT_EQ(d.flips, 0);

    d = decode(code, 0b001);  // 100
    ASSERT_TRUE(d.ok());
    EXPECT_EQ(word_str(d.codeword->word, 3), "000");
    EXPECT_TRUE(d.codeword->label.empty());
    EXPECT_EQ(d.flips, 1);
    EXPECT_THROW(decode(code, 0b1000), std::invalid_argument);
}

TEST(Decode, TieIsAFailure) {
    LocalizationCode code;
    code.part = Bipartition::from_a(3, std::vector<int>{1, 2});
    code.codewords = {{BitVec::zero(3), 0b00}, {BitVec::of(3, {3}), 0b11}};
    code.distance = 2;
    Decoded d = decode(code, 0b01);
    EXPECT_FALSE(d.ok());
    EXPECT_EQ(d.flips, 1);
}

TEST(Simulate, Examples) {
    Graph g = named("bistar");
    PartitionGroups pg = partition_groups(g, kSplit);
    for (uint64_t seed = 0; seed < 20; ++seed) {
        LocalizationReport r = simulate(g, kSplit, BitVec::of(5, {3}), seed);
        EXPECT_TRUE(r.success);
        ASSERT_TRUE(r.bob_state.has_value());
        EXPECT_EQ(*r.bob_state, schmidt_vectors(g, pg, r.ideal.label).vec_b);

        EXPECT_TRUE(simulate(g, kSplit, BitVec::zero(5), seed).success);
        LocalizationReport two = simulate(g, kSplit, BitVec::of(5, {2, 3}), seed);
        EXPECT_FALSE(two.success);
        EXPECT_TRUE(two.decoded.ok());
    }
    EXPECT_THROW(simulate(g, kSplit, BitVec::of(5, {4}), 0), std::invalid_argument);
}

TEST(Simulate, DeterministicAndCoversBothCodewords) {
    Graph g = named("bistar");
    std::map<uint32_t, int> seen;
    for (uint64_t seed = 0; seed < 64; ++seed) {
        LocalizationReport a = simulate(g, kSplit, BitVec::of(5, {1}), seed);
        LocalizationReport b = simulate(g, kSplit, BitVec::of(5, {1}), seed);
        EXPECT_EQ(a.ideal.word, b.ideal.word);
        EXPECT_EQ(a.noisy, b.noisy);
        ++seen[a.ideal.word];
    }
    EXPECT_EQ(seen.size(), 2u);
}

// Returns false when the code is not a multi-word code of distance >= 3.
bool check_single_errors(const Graph &g, const Bipartition &part) {
    PartitionGroups pg = partition_groups(g, part);
    if (pg.k_aa.dim() || pg.k_simb.dim()) {
        EXPECT_THROW(extract_code(g, part), std::invalid_argument);
        return false;
    }
    LocalizationCode code = extract_code(g, part);
    for (const auto &c : code.codewords) {
        XBasisExpansion vec_a = schmidt_vectors(g, pg, c.label).vec_a;
        EXPECT_EQ(vec_a.size(), 1u);
        EXPECT_EQ(vec_a.terms.begin()->first, c.word);
    }
    if (code.distance < 3 || code.codewords.size() < 2) {
        return false;
    }
    for (const auto &c : code.codewords) {
        for (int bit = 0; bit < code.length(); ++bit) {
            Decoded d = decode(code, c.word ^ (1u << bit));
            EXPECT_TRUE(d.ok());
            EXPECT_TRUE(d.ok() && d.codeword->label == c.label);
        }
    }
    return true;
}

TEST(LocalizeProperties, SingleErrorsCorrectedWheneverDistanceAllows) {
    int codes = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const Graph &g : testing::all_graphs(n)) {
            for (const auto &part : testing::all_bipartitions(n)) {
                codes += check_single_errors(g, part);
            }
        }
    }
    EXPECT_GT(codes, 0);
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = 6 + static_cast<int>(rng() % 5);
        Graph g = testing::random_graph(n, rng, 0.3);
        check_single_errors(g, testing::random_bipartition(n, rng));
    }
}

TEST(LocalizeProperties, PhaseErrorsLeaveOutcomesUnchanged) {
    // An X error on Alice's side only changes signs of X-basis amplitudes.
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = testing::random_graph(n, rng);
        Bipartition part = testing::random_bipartition(n, rng);
        DenseState x = dense_to_x(dense_state_z(g));
        VertexSet errs(n, static_cast<uint32_t>(rng()) & part.a.bits());
        DenseState noisy = apply_pauli(x, {1, errs, BitVec::zero(n)});
        for (size_t i = 0; i < x.amps.size(); ++i) {
            ASSERT_EQ(noisy.amps[i] * noisy.amps[i], x.amps[i] * x.amps[i]);
        }
    }
}

}  // namespace
}  // namespace xchain
