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

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "xchain/factorization.h"

namespace xchain {

namespace {

constexpr int kMaxCodeDim = 20;

}  // namespace

std::string word_str(uint32_t word, int length) {
    std::string s;
    for (int j = 0; j < length; ++j) {
        s.push_back(((word >> j) & 1u) ? '1' : '0');
    }
    return s;
}

LocalizationCode extract_code(const Graph &g, const Bipartition &part) {
    PartitionGroups pg = partition_groups(g, part);
    if (pg.k_aa.dim() != 0) {
        throw std::invalid_argument("A-side Schmidt vectors are superpositions: k_aa = " + pg.k_aa.str());
    }
    if (pg.k_simb.dim() != 0) {
        throw std::invalid_argument("A-side Schmidt vectors are superpositions: k_simb = " + pg.k_simb.str());
    }
    if (pg.k_harpoon.dim() > kMaxCodeDim) {
        throw std::length_error("code has too many codewords");
    }
    LocalizationCode code;
    code.part = part;
    for (const auto &xi : pg.k_harpoon.elements()) {
        XChainState s = xchain_state(g, pg.xd, xi);
        code.codewords.push_back({xi, restrict_to(s.bits.bits(), part.a)});
    }
    code.distance = part.a.count() + 1;
    for (size_t i = 0; i < code.codewords.size(); ++i) {
        for (size_t j = i + 1; j < code.codewords.size(); ++j) {
            int d = std::popcount(code.codewords[i].word ^ code.codewords[j].word);
            if (d == 0) {
                throw std::logic_error("repeated codeword");
            }
            code.distance = std::min(code.distance, d);
        }
    }
    return code;
}

Decoded decode(const LocalizationCode &code, uint32_t observed) {
    if (code.length() < 32 && (observed >> code.length()) != 0) {
        throw std::invalid_argument("observed word is wider than the code");
    }
    Decoded out;
    int best = code.length() + 1;
    int ties = 0;
    for (const auto &c : code.codewords) {
        int d = std::popcount(c.word ^ observed);
        if (d < best) {
            best = d;
            ties = 1;
            out.codeword = c;
        } else if (d == best) {
            ++ties;
        }
    }
    out.flips = best;
    if (ties != 1) {
        out.codeword.reset();
    }
    return out;
}

LocalizationReport simulate(const Graph &g, const Bipartition &part, const VertexSet &errors, uint64_t seed) {
    if (!errors.subset_of(part.a)) {
        throw std::invalid_argument("error positions " + errors.set_str() + " are not on Alice's side");
    }
    LocalizationCode code = extract_code(g, part);
    std::mt19937_64 rng(seed);
    const uint64_t count = code.codewords.size();
    LocalizationReport r;
    r.ideal = code.codewords[rng() & (count - 1)];
    r.noisy = r.ideal.word ^ restrict_to(errors.bits(), part.a);
    r.decoded = decode(code, r.noisy);
    r.success = r.decoded.ok() && r.decoded.codeword->label == r.ideal.label;
    if (r.decoded.ok()) {
        PartitionGroups pg = partition_groups(g, part);
        r.bob_state = schmidt_vectors(g, pg, r.decoded.codeword->label).vec_b;
    }
    return r;
}

}  // namespace xchain
