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

#ifndef XCHAIN_FACTORIZATION_H
#define XCHAIN_FACTORIZATION_H

#include <optional>
#include <utility>
#include <vector>

#include "xchain/dyadic.h"
#include "xchain/expansion.h"
#include "xchain/gf2.h"
#include "xchain/graph.h"

namespace xchain {

/// Largest correlation-group dimension for which the global sign is
/// computed by summing parities over the whole group.
constexpr int kMaxAlphaDim = 20;

/// X-chain factorization P(V) = <Gamma_G> x <K_G> of one graph.
struct XChainData {
    /// Canonical basis of the X-chain group.
    Basis gamma;
    /// Generators in use; for factorize() these are gamma's rows.
    std::vector<VertexSet> generators;
    /// exclusive[i]: vertex owned by generators[i] alone.
    std::vector<int> exclusive;
    /// Vertices outside `exclusive`; their singletons generate K_G.
    std::vector<int> kappa;
    /// Fundamental X-chain string x_Gamma.
    VertexSet x_gamma;
    /// Global sign; empty when |K_G| > kMaxAlphaDim.
    std::optional<int> alpha;

    int n() const { return x_gamma.width(); }
    /// Union of the kappa singletons.
    VertexSet kappa_mask() const;
    /// Basis of the correlation group <K_G>.
    Basis correlation_group() const;
    /// alpha, or std::domain_error when it was not computed.
    int require_alpha() const;
};

/// X-chain group: kernel of A_G over GF(2).
Basis xchain_group(const Graph &g);

/// True iff A_G xi = 0.
bool is_xchain(const Graph &g, const VertexSet &xi);

/// Factorization with RREF generators; pivots are the exclusive vertices.
XChainData factorize(const Graph &g);

/// Factorization from any X-chain generating set whose members each own a
/// vertex no other member contains. Throws std::invalid_argument otherwise.
XChainData factorize_with(const Graph &g, const std::vector<VertexSet> &generators);

/// Generators in reduced echelon form with respect to a column order; the
/// exclusive vertex of each is its first column in that order.
std::vector<VertexSet> generators_for_order(const Basis &gamma, const std::vector<int> &vertex_order);

/// sign(sum over <K_G> of parity) computed with the parity-sum kernel.
int global_sign(const Graph &g, const XChainData &xd);

struct XChainState {
    int sign = 1;
    VertexSet bits;
    bool operator==(const XChainState &o) const = default;
};

/// s^{(xi)} |x_Gamma> = parity(xi) (-1)^{|xi & x_Gamma|} |x_Gamma + c_xi>.
/// For xi in <K_G> the middle factor is 1. The result depends only on the
/// coset of xi modulo the X-chain group.
XChainState xchain_state(const Graph &g, const XChainData &xd, const VertexSet &xi);

/// 2^{-dim k/2} sum_{xi' in <k>} |psi_0(xi + xi')>. Throws
/// std::logic_error on a term collision (k meets the X-chain group).
XBasisExpansion correlation_state(const Graph &g, const XChainData &xd, const Basis &k, const VertexSet &xi);

/// Graph state in the X basis, global sign included.
XBasisExpansion x_representation(const Graph &g);
XBasisExpansion x_representation(const Graph &g, const XChainData &xd);

struct Outcome {
    VertexSet bits;
    DyadicFraction probability;
    bool operator==(const Outcome &o) const = default;
};

/// Nonzero X-measurement outcomes with their probabilities, sorted by key.
std::vector<Outcome> measurement_support(const Graph &g);

struct DistinguishingOutcomes {
    std::vector<VertexSet> only_g;
    std::vector<VertexSet> only_h;
};

DistinguishingOutcomes distinguishing_outcomes(const Graph &g, const Graph &h);

}  // namespace xchain

#endif
