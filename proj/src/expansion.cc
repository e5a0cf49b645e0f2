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

#include "xchain/expansion.h"

#include <stdexcept>

#include "xchain/kernels.h"

namespace xchain {

XBasisExpansion XBasisExpansion::over(int n) {
    XBasisExpansion e;
    for (int v = 1; v <= n; ++v) {
        e.qubits.push_back(v);
    }
    return e;
}

XBasisExpansion XBasisExpansion::over(const VertexSet &part) {
    XBasisExpansion e;
    e.qubits = part.vertices();
    return e;
}

void XBasisExpansion::insert_unique(uint32_t key, int sign) {
    if (!terms.emplace(key, sign).second) {
        throw std::logic_error("expansion term collision at |" + ket(key) + ">");
    }
}

XBasisExpansion XBasisExpansion::negated() const {
    XBasisExpansion e = *this;
    for (auto &[key, sign] : e.terms) {
        sign = -sign;
    }
    return e;
}

std::string XBasisExpansion::ket(uint32_t key) const {
    std::string s(qubits.size(), '0');
    for (size_t j = 0; j < qubits.size(); ++j) {
        if ((key >> j) & 1u) {
            s[j] = '1';
        }
    }
    return s;
}

std::string scale_prefix(int half_log) {
    if (half_log == 0) {
        return "";
    }
    int whole = half_log / 2;
    bool root = half_log % 2;
    std::string den;
    if (whole > 0) {
        den = std::to_string(int64_t{1} << whole);
    }
    if (root) {
        den += "sqrt2";
    }
    if (whole > 0 && root) {
        den = "(" + den + ")";
    }
    return "1/" + den;
}

std::string XBasisExpansion::str() const {
    std::string body;
    bool first = true;
    for (auto [key, sign] : terms) {
        if (first) {
            body += sign < 0 ? "-" : "";
        } else {
            body += sign < 0 ? " - " : " + ";
        }
        body += "|" + ket(key) + ">";
        first = false;
    }
    if (terms.empty()) {
        return "0";
    }
    std::string prefix = scale_prefix(half_log_norm);
    if (prefix.empty() && terms.size() == 1) {
        return body;
    }
    return prefix + "(" + body + ")";
}

DyadicReal inner_product(const XBasisExpansion &a, const XBasisExpansion &b) {
    if (a.qubits != b.qubits) {
        throw std::invalid_argument("inner product of expansions over different qubits");
    }
    int64_t total = 0;
    for (auto [key, sign] : a.terms) {
        if (auto it = b.terms.find(key); it != b.terms.end()) {
            total += sign * it->second;
        }
    }
    return DyadicReal::from_scaled(total, a.half_log_norm + b.half_log_norm);
}

uint32_t restrict_to(uint32_t mask, const VertexSet &part) {
    uint32_t out = 0;
    int j = 0;
    for (uint32_t p = part.bits(); p; p &= p - 1, ++j) {
        if (mask & p & (~p + 1)) {
            out |= uint32_t{1} << j;
        }
    }
    return out;
}

uint32_t embed_from(uint32_t local, const VertexSet &part) { return kernels::deposit(local, part.bits()); }

}  // namespace xchain
