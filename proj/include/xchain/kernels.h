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

#ifndef XCHAIN_KERNELS_H
#define XCHAIN_KERNELS_H

#include <bit>
#include <cstdint>
#include <span>

// Exponential-size inner loops. Each kernel has a plain serial reference in
// `serial::` and an OpenMP version in `parallel::`; the unqualified entry
// points pick one by problem size. Results are bit-identical either way.

namespace xchain::kernels {

/// Stabilizer parity (-1)^{|E(G[xi])|} from raw adjacency words.
inline int parity(std::span<const uint32_t> adj, uint32_t xi) {
    int twice = 0;
    for (uint32_t rest = xi; rest; rest &= rest - 1) {
        twice += std::popcount(adj[std::countr_zero(rest)] & xi);
    }
    return ((twice >> 1) & 1) ? -1 : 1;
}

/// Scatters the low bits of `code` into the set positions of `mask`.
inline uint32_t deposit(uint64_t code, uint32_t mask) {
    uint32_t out = 0;
    for (uint32_t m = mask; m && code; m &= m - 1, code >>= 1) {
        if (code & 1u) {
            out |= m & (~m + 1);
        }
    }
    return out;
}

/// Problem size (number of terms) at which the dispatchers go parallel.
constexpr uint64_t kParallelThreshold = uint64_t{1} << 12;

namespace serial {

/// Sum of parity(xi) over all subsets xi of `support`.
int64_t parity_sum(std::span<const uint32_t> adj, uint32_t support);
/// out[xi] = parity(xi) for every xi < out.size(); out.size() must be 2^n.
void parity_table(std::span<const uint32_t> adj, std::span<int64_t> out);
/// Unnormalised Walsh-Hadamard transform in place; size a power of two.
void walsh_hadamard(std::span<int64_t> amps);
int64_t dot(std::span<const int64_t> a, std::span<const int64_t> b);

}  // namespace serial

namespace parallel {

int64_t parity_sum(std::span<const uint32_t> adj, uint32_t support);
void parity_table(std::span<const uint32_t> adj, std::span<int64_t> out);
void walsh_hadamard(std::span<int64_t> amps);
int64_t dot(std::span<const int64_t> a, std::span<const int64_t> b);

}  // namespace parallel

int64_t parity_sum(std::span<const uint32_t> adj, uint32_t support);
void parity_table(std::span<const uint32_t> adj, std::span<int64_t> out);
void walsh_hadamard(std::span<int64_t> amps);
int64_t dot(std::span<const int64_t> a, std::span<const int64_t> b);

}  // namespace xchain::kernels

#endif
