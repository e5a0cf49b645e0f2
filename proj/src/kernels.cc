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

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace xchain::kernels {

namespace {

void check_power_of_two(size_t size) {
    if (size == 0 || !std::has_single_bit(size)) {
        throw std::invalid_argument("kernel input size must be a power of two");
    }
}

void check_sizes(size_t a, size_t b) {
    if (a != b) {
        throw std::invalid_argument("kernel input sizes differ");
    }
}

}  // namespace

namespace serial {

int64_t parity_sum(std::span<const uint32_t> adj, uint32_t support) {
    int64_t total = 0;
    uint32_t xi = 0;
    do {
        total += parity(adj, xi);
        xi = (xi - support) & support;
    } while (xi != 0);
    return total;
}

void parity_table(std::span<const uint32_t> adj, std::span<int64_t> out) {
    check_power_of_two(out.size());
    for (size_t xi = 0; xi < out.size(); ++xi) {
        out[xi] = parity(adj, static_cast<uint32_t>(xi));
    }
}

void walsh_hadamard(std::span<int64_t> amps) {
    check_power_of_two(amps.size());
    for (size_t h = 1; h < amps.size(); h <<= 1) {
        for (size_t i = 0; i < amps.size(); i += 2 * h) {
            for (size_t j = i; j < i + h; ++j) {
                int64_t x = amps[j];
                int64_t y = amps[j + h];
                amps[j] = x + y;
                amps[j + h] = x - y;
            }
        }
    }
}

int64_t dot(std::span<const int64_t> a, std::span<const int64_t> b) {
    check_sizes(a.size(), b.size());
    int64_t total = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        total += a[i] * b[i];
    }
    return total;
}

}  // namespace serial

namespace parallel {

// Blocks of the subset counter are walked in Gray-code order so that each
// step toggles one vertex and updates the parity incrementally.
int64_t parity_sum(std::span<const uint32_t> adj, uint32_t support) {
    const int m = std::popcount(support);
    const int64_t total_terms = int64_t{1} << m;
    std::vector<int> vertex_of(m);
    {
        int k = 0;
        for (uint32_t s = support; s; s &= s - 1) {
            vertex_of[k++] = std::countr_zero(s);
        }
    }
    const int64_t block = std::min<int64_t>(total_terms, int64_t{1} << 10);
    const int64_t blocks = total_terms / block;
    int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (int64_t b = 0; b < blocks; ++b) {
        const int64_t lo = b * block;
        uint64_t gray = static_cast<uint64_t>(lo ^ (lo >> 1));
        uint32_t xi = deposit(gray, support);
        int p = parity(adj, xi);
        int64_t local = p;
        for (int64_t k = lo + 1; k < lo + block; ++k) {
            const int t = std::countr_zero(static_cast<uint64_t>(k));
            const int v = vertex_of[t];
            const uint32_t bit = uint32_t{1} << v;
            if (std::popcount(adj[v] & (xi & ~bit)) & 1) {
                p = -p;
            }
            xi ^= bit;
            local += p;
        }
        total += local;
    }
    return total;
}

// parity(H | L) = parity(H) * parity(L) * (-1)^{cut(H, L)}, with L ranging
// over the low `low_bits` vertices and H over the rest.
void parity_table(std::span<const uint32_t> adj, std::span<int64_t> out) {
    check_power_of_two(out.size());
    const int n = std::countr_zero(out.size());
    const int low_bits = std::min(n, 10);
    const size_t low_size = size_t{1} << low_bits;
    std::vector<int64_t> low_table(low_size);
    serial::parity_table(adj, low_table);
    const int64_t high_count = static_cast<int64_t>(out.size() >> low_bits);
#pragma omp parallel for schedule(static)
    for (int64_t high = 0; high < high_count; ++high) {
        const uint32_t h = static_cast<uint32_t>(high) << low_bits;
        const int ph = parity(adj, h);
        uint32_t cross = 0;
        for (int v = 0; v < low_bits; ++v) {
            cross |= static_cast<uint32_t>(std::popcount(adj[v] & h) & 1) << v;
        }
        int64_t *dst = out.data() + static_cast<size_t>(h);
        for (size_t l = 0; l < low_size; ++l) {
            const bool flip = std::popcount(static_cast<uint32_t>(l) & cross) & 1;
            dst[l] = (flip ? -ph : ph) * low_table[l];
        }
    }
}

// Stages below the block size run as independent serial transforms of each
// block; the remaining stages pair elements across blocks.
void walsh_hadamard(std::span<int64_t> amps) {
    check_power_of_two(amps.size());
    const size_t block = std::min<size_t>(amps.size(), size_t{1} << 12);
    const int64_t blocks = static_cast<int64_t>(amps.size() / block);
#pragma omp parallel for schedule(static)
    for (int64_t b = 0; b < blocks; ++b) {
        serial::walsh_hadamard(amps.subspan(static_cast<size_t>(b) * block, block));
    }
    const int64_t half = static_cast<int64_t>(amps.size() / 2);
    for (size_t h = block; h < amps.size(); h <<= 1) {
#pragma omp parallel for schedule(static)
        for (int64_t i = 0; i < half; ++i) {
            const size_t low = static_cast<size_t>(i) & (h - 1);
            const size_t j = ((static_cast<size_t>(i) - low) << 1) | low;
            const int64_t x = amps[j];
            const int64_t y = amps[j + h];
            amps[j] = x + y;
            amps[j + h] = x - y;
        }
    }
}

int64_t dot(std::span<const int64_t> a, std::span<const int64_t> b) {
    check_sizes(a.size(), b.size());
    const int64_t size = static_cast<int64_t>(a.size());
    int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (int64_t i = 0; i < size; ++i) {
        total += a[i] * b[i];
    }
    return total;
}

}  // namespace parallel

int64_t parity_sum(std::span<const uint32_t> adj, uint32_t support) {
    if ((uint64_t{1} << std::popcount(support)) >= kParallelThreshold) {
        return parallel::parity_sum(adj, support);
    }
    return serial::parity_sum(adj, support);
}

void parity_table(std::span<const uint32_t> adj, std::span<int64_t> out) {
    if (out.size() >= kParallelThreshold) {
        parallel::parity_table(adj, out);
    } else {
        serial::parity_table(adj, out);
    }
}

void walsh_hadamard(std::span<int64_t> amps) {
    if (amps.size() >= kParallelThreshold) {
        parallel::walsh_hadamard(amps);
    } else {
        serial::walsh_hadamard(amps);
    }
}

int64_t dot(std::span<const int64_t> a, std::span<const int64_t> b) {
    if (a.size() >= kParallelThreshold) {
        return parallel::dot(a, b);
    }
    return serial::dot(a, b);
}

}  // namespace xchain::kernels
