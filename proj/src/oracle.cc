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

#include "xchain/oracle.h"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

#include "xchain/kernels.h"

namespace xchain {

namespace {

using boost::multiprecision::cpp_int;

void require_dense(int n) {
    if (n > kMaxDenseQubits) {
        throw std::invalid_argument("dense oracle is limited to n <= " + std::to_string(kMaxDenseQubits) + ", got " +
                                    std::to_string(n));
    }
}

DenseState hadamard(const DenseState &s, Frame to) {
    DenseState out = s;
    kernels::walsh_hadamard(out.amps);
    out.scale += s.n;
    out.frame = to;
    return out.normalized();
}

int rank_of(std::vector<std::vector<cpp_int>> m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    cpp_int prev = 1;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(m[pivot], m[rank]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c) {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace

int64_t DenseState::norm2() const { return kernels::dot(amps, amps); }

bool DenseState::is_unit() const { return scale < 63 && norm2() == (int64_t{1} << scale); }

DenseState DenseState::normalized() const {
    DenseState out = *this;
    while (out.scale >= 2) {
        bool even = true;
        for (int64_t a : out.amps) {
            if (a & 1) {
                even = false;
                break;
            }
        }
        if (!even) {
            break;
        }
        for (auto &a : out.amps) {
            a /= 2;
        }
        out.scale -= 2;
    }
    return out;
}

DenseState dense_state_z(const Graph &g) {
    require_dense(g.n());
    DenseState s;
    s.n = g.n();
    s.amps.assign(size_t{1} << g.n(), 0);
    s.scale = g.n();
    kernels::parity_table(g.rows(), s.amps);
    return s;
}

DenseState dense_to_x(const DenseState &s) {
    if (s.frame != Frame::Z) {
        throw std::invalid_argument("state is already in the X frame");
    }
    return hadamard(s, Frame::X);
}

DenseState dense_to_z(const DenseState &s) {
    if (s.frame != Frame::X) {
        throw std::invalid_argument("state is already in the Z frame");
    }
    return hadamard(s, Frame::Z);
}

DenseState apply_pauli(const DenseState &s, const PauliStabilizer &p) {
    if (p.x_set.width() != s.n || p.z_set.width() != s.n) {
        throw std::invalid_argument("Pauli width differs from state size");
    }
    // P = phase * X^x Z^z. X flips bits in the Z frame and signs in the X frame.
    uint32_t flip = s.frame == Frame::Z ? p.x_set.bits() : p.z_set.bits();
    uint32_t signs_after = s.frame == Frame::Z ? p.z_set.bits() : 0;
    uint32_t signs_before = s.frame == Frame::Z ? 0 : p.x_set.bits();
    DenseState out = s;
    for (size_t i = 0; i < s.amps.size(); ++i) {
        uint32_t src = static_cast<uint32_t>(i) ^ flip;
        int64_t a = s.amps[src] * p.phase;
        if (std::popcount(src & signs_after) & 1) {
            a = -a;
        }
        if (std::popcount(static_cast<uint32_t>(i) & signs_before) & 1) {
            a = -a;
        }
        out.amps[i] = a;
    }
    return out;
}

bool check_stabilizer(const DenseState &s, const PauliStabilizer &p) { return apply_pauli(s, p) == s; }

DyadicReal dense_overlap(const Graph &g, const Graph &h) {
    if (g.n() != h.n()) {
        throw std::invalid_argument("graph sizes differ");
    }
    DenseState a = dense_state_z(g);
    DenseState b = dense_state_z(h);
    return DyadicReal::from_scaled(kernels::dot(a.amps, b.amps), a.scale + b.scale);
}

uint64_t dense_schmidt_rank(const Graph &g, const Bipartition &part) {
    DenseState s = dense_state_z(g);
    VertexSet rows_side = part.a.count() <= part.b.count() ? part.a : part.b;
    VertexSet cols_side = rows_side == part.a ? part.b : part.a;
    const size_t rows = size_t{1} << rows_side.count();
    const size_t cols = size_t{1} << cols_side.count();
    std::vector<std::vector<cpp_int>> m(rows, std::vector<cpp_int>(cols));
    for (size_t r = 0; r < rows; ++r) {
        uint32_t hi = embed_from(static_cast<uint32_t>(r), rows_side);
        for (size_t c = 0; c < cols; ++c) {
            m[r][c] = s.amps[hi | embed_from(static_cast<uint32_t>(c), cols_side)];
        }
    }
    return static_cast<uint64_t>(rank_of(std::move(m)));
}

std::vector<VertexSet> brute_xchains(const Graph &g) {
    if (g.n() > 20) {
        throw std::invalid_argument("brute_xchains is limited to n <= 20");
    }
    const auto rows = g.rows();
    std::vector<VertexSet> out;
    for (uint32_t xi = 0; xi < (uint32_t{1} << g.n()); ++xi) {
        uint32_t c = 0;
        for (uint32_t rest = xi; rest; rest &= rest - 1) {
            c ^= rows[std::countr_zero(rest)];
        }
        if (c == 0) {
            out.emplace_back(g.n(), xi);
        }
    }
    return out;
}

std::map<uint32_t, DyadicFraction> x_distribution(const Graph &g) {
    DenseState x = dense_to_x(dense_state_z(g));
    std::map<uint32_t, DyadicFraction> out;
    for (size_t i = 0; i < x.amps.size(); ++i) {
        if (x.amps[i] != 0) {
            out.emplace(static_cast<uint32_t>(i), DyadicFraction::make(x.amps[i] * x.amps[i], x.scale));
        }
    }
    return out;
}

DenseState dense_from_expansion(const XBasisExpansion &e) {
    const int n = static_cast<int>(e.qubits.size());
    require_dense(n);
    for (int j = 0; j < n; ++j) {
        if (e.qubits[j] != j + 1) {
            throw std::invalid_argument("expansion is not over vertices 1..n");
        }
    }
    DenseState s;
    s.n = n;
    s.amps.assign(size_t{1} << n, 0);
    s.scale = e.half_log_norm;
    s.frame = Frame::X;
    for (auto [key, sign] : e.terms) {
        s.amps[key] = sign;
    }
    return s.normalized();
}

DenseState dense_from_schmidt(int n, const SchmidtDecomposition &d) {
    require_dense(n);
    DenseState s;
    s.n = n;
    s.amps.assign(size_t{1} << n, 0);
    s.frame = Frame::X;
    if (d.terms.empty()) {
        throw std::invalid_argument("empty decomposition");
    }
    s.scale = d.coeff.half_log + d.terms[0].vec_a.half_log_norm + d.terms[0].vec_b.half_log_norm;
    for (const auto &t : d.terms) {
        if (d.coeff.half_log + t.vec_a.half_log_norm + t.vec_b.half_log_norm != s.scale) {
            throw std::logic_error("Schmidt terms have different normalisations");
        }
        for (auto [ka, sa] : t.vec_a.terms) {
            for (auto [kb, sb] : t.vec_b.terms) {
                s.amps[embed_from(ka, d.part.a) | embed_from(kb, d.part.b)] += d.alpha * t.sign * sa * sb;
            }
        }
    }
    return s.normalized();
}

}  // namespace xchain
