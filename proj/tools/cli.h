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

#ifndef XCHAIN_TOOLS_CLI_H
#define XCHAIN_TOOLS_CLI_H

#include <ostream>
#include <string_view>

#include "xchain/graph.h"

namespace xchain::cli {

/// Exit codes of run().
constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

/// "star:4" or "named:star:4", "@path" (edge list), "g6:<graph6>".
Graph load_graph(std::string_view spec);

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace xchain::cli

#endif
