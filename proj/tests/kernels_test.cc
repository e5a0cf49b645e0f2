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

#include "xchain/kernels.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "support.h"

namespace xchain {
namespace {

TEST(Kernels, ParitySumSerialEqualsParallel) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        Graph g = testing::random_graph(n, rng);
        uint32_t support = static_cast<uint32_t>(rng()) & ((uint32_t{1} << n) - 1);
        EXPECT_EQ(kernels::serial::parity_sum(g.rows(), support), kernels::parallel::parity_sum(g.rows(), support));
    }
}

TEST(Kernels, ParityTableSerialEqualsParallel) {
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 16);
        Graph g = testing::random_graph(n, rng);
        std::vector<int64_t> a(size_t{1} << n), b(size_t{1} << n);
        kernels::serial::parity_table(g.rows(), a);
        kernels::parallel::parity_table(g.rows(), b);
        EXPECT_EQ(a, b);
        for (size_t xi = 0; xi < a.size(); xi += 1 + a.size() / 64) {
            EXPECT_EQ(a[xi], kernels::parity(g.rows(), static_cast<uint32_t>(xi)));
        }
    }
}

TEST(Kernels, WalshHadamardSerialEqualsParallel) {
    std::mt19937_64 rng(73);
    for (int n = 0; n <= 16; ++n) {
        std::vector<int64_t> a(size_t{1} << n);
        for (auto &v : a) {
            v = static_cast<int64_t>(rng() % 7) - 3;
        }
        std::vector<int64_t> b = a, orig = a;
        kernels::serial::walsh_hadamard(a);
        kernels::parallel::walsh_hadamard(b);
        EXPECT_EQ(a, b);
        EXPECT_EQ(kernels::serial::dot(a, a), kernels::parallel::dot(b, b));
        EXPECT_EQ(kernels::dot(a, a), kernels::dot(orig, orig) << n);
        kernels::walsh_hadamard(a);
        for (size_t i = 0; i < a.size(); ++i) {
            EXPECT_EQ(a[i], orig[i] << n);
        }
    }
}

TEST(Kernels, Deposit) {
    EXPECT_EQ(kernels::deposit(0b11, 0b1010), 0b1010u);
    EXPECT_EQ(kernels::deposit(0b10, 0b1010), 0b1000u);
    EXPECT_EQ(kernels::deposit(0b101, 0b10110), 0b10010u);
}

}  // namespace
}  // namespace xchain
