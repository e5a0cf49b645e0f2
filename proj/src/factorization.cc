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

#include "xchain/factorization.h"

#include <algorithm>
#include <stdexcept>

#include "xchain/kernels.h"
#include "xchain/stabilizer.h"

namespace xchain {

namespace {

constexpr int kMaxExpansionDim = 24;

}  // namespace

VertexSet XChainData::kappa_mask() const { return BitVec::of(n(), kappa); }

Basis XChainData::correlation_group() const {
    std::vector<BitVec> rows;
    for (int v : kappa) {
        rows.push_back(BitVec::of(n(), {v}));
    }
    return Basis::span_of(n(), rows);
}

int XChainData::require_alpha() const {
    if (!alpha) {
        throw std::domain_error("global sign not computed: correlation group dimension " +
                                std::to_string(kappa.size()) + " exceeds " + std::to_string(kMaxAlphaDim));
    }
    return *alpha;
}

Basis xchain_group(const Graph &g) { return kernel(g.adjacency()); }

bool is_xchain(const Graph &g, const VertexSet &xi) { return correlation_index(g, xi).empty(); }

int global_sign(const Graph &g, const XChainData &xd) {
    int64_t total = kernels::parity_sum(g.rows(), xd.kappa_mask().bits());
    if (total == 0) {
        throw std::logic_error("parity sum over the correlation group vanished");
    }
    return total > 0 ? 1 : -1;
}

XChainData factorize_with(const Graph &g, const std::vector<VertexSet> &generators) {
    const int n = g.n();
    Basis gamma = xchain_group(g);
    Basis spanned = Basis::span_of(n, generators);
    if (spanned != gamma || static_cast<int>(generators.size()) != gamma.dim()) {
        throw std::invalid_argument("generators are not a basis of the X-chain group");
    }
    XChainData xd;
    xd.gamma = gamma;
    xd.generators = generators;
    uint32_t exclusive_mask = 0;
    uint32_t x_gamma = 0;
    for (size_t i = 0; i < generators.size(); ++i) {
        uint32_t others = 0;
        for (size_t j = 0; j < generators.size(); ++j) {
            if (j != i) {
                others |= generators[j].bits();
            }
        }
        uint32_t own = generators[i].bits() & ~others;
        if (own == 0) {
            throw std::invalid_argument("generator " + generators[i].set_str() + " has no exclusive vertex");
        }
        int v = std::countr_zero(own) + 1;
        xd.exclusive.push_back(v);
        exclusive_mask |= uint32_t{1} << (v - 1);
        if (stabilizer_parity(g, generators[i]) < 0) {
            x_gamma |= uint32_t{1} << (v - 1);
        }
    }
    for (int v = 1; v <= n; ++v) {
        if (!((exclusive_mask >> (v - 1)) & 1u)) {
            xd.kappa.push_back(v);
        }
    }
    xd.x_gamma = BitVec(n, x_gamma);
    if (static_cast<int>(xd.kappa.size()) <= kMaxAlphaDim) {
        xd.alpha = global_sign(g, xd);
    }
    return xd;
}

XChainData factorize(const Graph &g) { return factorize_with(g, xchain_group(g).rows()); }

std::vector<VertexSet> generators_for_order(const Basis &gamma, const std::vector<int> &vertex_order) {
    std::vector<uint32_t> rows;
    for (const auto &r : gamma.rows()) {
        rows.push_back(r.bits());
    }
    std::vector<uint32_t> out;
    for (int v : vertex_order) {
        if (rows.empty()) {
            break;
        }
        uint32_t bit = uint32_t{1} << (v - 1);
        auto it = std::find_if(rows.begin(), rows.end(), [&](uint32_t r) { return r & bit; });
        if (it == rows.end()) {
            continue;
        }
        uint32_t pivot_row = *it;
        rows.erase(it);
        for (auto &r : rows) {
            if (r & bit) {
                r ^= pivot_row;
            }
        }
        for (auto &r : out) {
            if (r & bit) {
                r ^= pivot_row;
            }
        }
        out.push_back(pivot_row);
    }
    if (!rows.empty()) {
        throw std::invalid_argument("vertex order does not cover the X-chain group");
    }
    std::vector<VertexSet> gens;
    for (uint32_t r : out) {
        gens.emplace_back(gamma.width(), r);
    }
    return gens;
}

XChainState xchain_state(const Graph &g, const XChainData &xd, const VertexSet &xi) {
    int sign = stabilizer_parity(g, xi);
    if (xi.dot(xd.x_gamma)) {
        sign = -sign;
    }
    return {sign, xd.x_gamma ^ correlation_index(g, xi)};
}

XBasisExpansion correlation_state(const Graph &g, const XChainData &xd, const Basis &k, const VertexSet &xi) {
    if (k.dim() > kMaxExpansionDim) {
        throw std::length_error("correlation subgroup too large to expand");
    }
    XBasisExpansion e = XBasisExpansion::over(g.n());
    e.half_log_norm = k.dim();
    for (uint64_t code = 0; code < (uint64_t{1} << k.dim()); ++code) {
        XChainState s = xchain_state(g, xd, xi ^ k.combine(code));
        e.insert_unique(s.bits.bits(), s.sign);
    }
    return e;
}

XBasisExpansion x_representation(const Graph &g, const XChainData &xd) {
    XBasisExpansion e = correlation_state(g, xd, xd.correlation_group(), BitVec::zero(g.n()));
    int alpha = xd.alpha ? *xd.alpha : global_sign(g, xd);
    return alpha < 0 ? e.negated() : e;
}

XBasisExpansion x_representation(const Graph &g) { return x_representation(g, factorize(g)); }

std::vector<Outcome> measurement_support(const Graph &g) {
    if (g.n() > 20) {
        throw std::invalid_argument("measurement_support is limited to n <= 20");
    }
    XChainData xd = factorize(g);
    Basis k = xd.correlation_group();
    DyadicFraction p = DyadicFraction::make(1, k.dim());
    std::vector<Outcome> out;
    for (uint64_t code = 0; code < (uint64_t{1} << k.dim()); ++code) {
        out.push_back({xchain_state(g, xd, k.combine(code)).bits, p});
    }
    std::sort(out.begin(), out.end(), [](const Outcome &a, const Outcome &b) { return a.bits < b.bits; });
    return out;
}

DistinguishingOutcomes distinguishing_outcomes(const Graph &g, const Graph &h) {
    if (g.n() != h.n()) {
        throw std::invalid_argument("graph sizes differ");
    }
    auto keys = [](const std::vector<Outcome> &support) {
        std::vector<VertexSet> out;
        for (const auto &o : support) {
            out.push_back(o.bits);
        }
        return out;
    };
    auto sg = keys(measurement_support(g));
    auto sh = keys(measurement_support(h));
    DistinguishingOutcomes d;
    std::set_difference(sg.begin(), sg.end(), sh.begin(), sh.end(), std::back_inserter(d.only_g));
    std::set_difference(sh.begin(), sh.end(), sg.begin(), sg.end(), std::back_inserter(d.only_h));
    return d;
}

}  // namespace xchain
