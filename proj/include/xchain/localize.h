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

#ifndef XCHAIN_LOCALIZE_H
#define XCHAIN_LOCALIZE_H

#include <cstdint>
#include <optional>
#include <vector>

#include "xchain/expansion.h"
#include "xchain/graph.h"
#include "xchain/schmidt.h"

namespace xchain {

struct Codeword {
    VertexSet label;
    /// X-basis outcome on A, bit j = j-th smallest vertex of A.
    uint32_t word = 0;
};

/// Repetition code formed by the A-side Schmidt vectors when each of them
/// is a single X-basis string.
struct LocalizationCode {
    Bipartition part;
    std::vector<Codeword> codewords;
    /// Minimum pairwise Hamming distance, or |A| + 1 for a single codeword.
    int distance = 0;

    int length() const { return part.a.count(); }
    /// Number of bit flips that are always corrected.
    int correctable() const { return (distance - 1) / 2; }
};

LocalizationCode extract_code(const Graph &g, const Bipartition &part);

struct Decoded {
    /// Empty when two or more codewords are nearest.
    std::optional<Codeword> codeword;
    int flips = 0;
    bool ok() const { return codeword.has_value(); }
};

Decoded decode(const LocalizationCode &code, uint32_t observed);

struct LocalizationReport {
    Codeword ideal;
    uint32_t noisy = 0;
    Decoded decoded;
    bool success = false;
    /// Bob's Schmidt vector for the decoded label.
    std::optional<XBasisExpansion> bob_state;
};

/// Samples an ideal outcome (seeded), flips the outcome bits at the Z-error
/// positions and decodes.
LocalizationReport simulate(const Graph &g, const Bipartition &part, const VertexSet &errors, uint64_t seed);

/// Renders a local word in qubit order, e.g. "110".
std::string word_str(uint32_t word, int length);

}  // namespace xchain

#endif
