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

#include "xchain/verify.h"

#include <gtest/gtest.h>

namespace xchain {
namespace {

TEST(Verify, IsomorphismClassCounts) {
    const std::vector<size_t> expected{1, 2, 4, 11, 34};
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(isomorphism_classes(n).size(), expected[n - 1]) << n;
    }
    EXPECT_EQ(labelled_graphs(4).size(), 64u);
}

TEST(Verify, OracleSuiteSmallScope) {
    OracleSuiteOptions o;
    o.exhaustive_max_n = 4;
    o.max_n = 7;
    o.samples = 40;
    auto results = oracle_equivalence(o);
    ASSERT_EQ(results.size(), 6u);
    for (const auto &r : results) {
        EXPECT_TRUE(r.ok()) << r.name << ": " << r.first_failure;
        EXPECT_GT(r.cases, 0u) << r.name;
    }
}

TEST(Verify, OracleSuiteIsDeterministic) {
    OracleSuiteOptions o;
    o.exhaustive_max_n = 3;
    o.max_n = 8;
    o.samples = 20;
    o.seed = 7;
    auto first = oracle_equivalence(o);
    auto second = oracle_equivalence(o);
    for (size_t i = 0; i < first.size(); ++i) {
        EXPECT_EQ(first[i].cases, second[i].cases);
        EXPECT_EQ(first[i].failures, second[i].failures);
    }
}

TEST(Verify, LemmaSuiteSmallScope) {
    auto results = lemma_suite({4, 4, 5});
    ASSERT_EQ(results.size(), 7u);
    for (const auto &r : results) {
        EXPECT_TRUE(r.ok()) << r.name << ": " << r.first_failure;
        EXPECT_GT(r.cases, 0u) << r.name;
    }
}

TEST(Verify, RejectsOversizeScope) {
    OracleSuiteOptions o;
    o.max_n = 15;
    EXPECT_THROW(oracle_equivalence(o), std::invalid_argument);
    EXPECT_THROW(lemma_suite({7, 5, 6}), std::invalid_argument);
    EXPECT_THROW(labelled_graphs(8), std::invalid_argument);
}

}  // namespace
}  // namespace xchain
