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

#ifndef XCHAIN_VERIFY_H
#define XCHAIN_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

#include "xchain/graph.h"

namespace xchain {

struct CheckResult {
    std::string name;
    uint64_t cases = 0;
    uint64_t failures = 0;
    /// Description of the first failing case in enumeration order.
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

/// Compares every analytic result against the dense oracle: all graphs up to
/// exhaustive_max_n vertices, then `samples` random graphs with
/// random_min_n..max_n vertices.
struct OracleSuiteOptions {
    int exhaustive_max_n = 5;
    int random_min_n = 6;
    int max_n = 10;
    int samples = 500;
    int bipartitions = 3;
    uint64_t seed = 1;
};

std::vector<CheckResult> oracle_equivalence(const OracleSuiteOptions &options);

/// Stabilizer and correlation-state identities. Stabilizer-level identities run over every labelled
/// graph up to labelled_max_n; dense identities over every labelled graph up
/// to dense_labelled_max_n plus one representative per isomorphism class on
/// class_n vertices (0 disables the class pass).
struct LemmaSuiteOptions {
    int labelled_max_n = 6;
    int dense_labelled_max_n = 5;
    int class_n = 6;
};

std::vector<CheckResult> lemma_suite(const LemmaSuiteOptions &options);

/// One canonical graph per isomorphism class on n <= 7 vertices, sorted.
std::vector<Graph> isomorphism_classes(int n);

/// Every labelled graph on n vertices, indexed by the edge bitmask.
std::vector<Graph> labelled_graphs(int n);

}  // namespace xchain

#endif
