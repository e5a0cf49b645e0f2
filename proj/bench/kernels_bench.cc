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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "xchain/kernels.h"

namespace {

std::vector<uint32_t> random_adjacency(int n) {
    std::mt19937_64 rng(n);
    std::vector<uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng() & 1) {
                adj[u] |= uint32_t{1} << v;
                adj[v] |= uint32_t{1} << u;
            }
        }
    }
    return adj;
}

template <int64_t (*Kernel)(std::span<const uint32_t>, uint32_t)>
void BM_ParitySum(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto adj = random_adjacency(n);
    const uint32_t support = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(adj, support));
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}

template <void (*Kernel)(std::span<const uint32_t>, std::span<int64_t>)>
void BM_ParityTable(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto adj = random_adjacency(n);
    std::vector<int64_t> out(size_t{1} << n);
    for (auto _ : state) {
        Kernel(adj, out);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}

template <void (*Kernel)(std::span<int64_t>)>
void BM_WalshHadamard(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<int64_t> amps(size_t{1} << n, 1);
    for (auto _ : state) {
        Kernel(amps);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << n) * n);
}

using namespace xchain::kernels;

BENCHMARK(BM_ParitySum<serial::parity_sum>)->Name("parity_sum/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_ParitySum<parallel::parity_sum>)->Name("parity_sum/parallel")->DenseRange(12, 20, 4);
BENCHMARK(BM_ParityTable<serial::parity_table>)->Name("parity_table/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_ParityTable<parallel::parity_table>)->Name("parity_table/parallel")->DenseRange(12, 20, 4);
BENCHMARK(BM_WalshHadamard<serial::walsh_hadamard>)->Name("walsh_hadamard/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_WalshHadamard<parallel::walsh_hadamard>)->Name("walsh_hadamard/parallel")->DenseRange(12, 20, 4);

}  // namespace

BENCHMARK_MAIN();
