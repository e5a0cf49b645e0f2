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

#ifndef XCHAIN_GF2_H
#define XCHAIN_GF2_H

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace xchain {

/// Maximum number of vertices (columns) supported anywhere in the library.
constexpr int kMaxWidth = 32;

/// An n-bit row over GF(2). Bit j-1 holds vertex j; strings are written
/// i_1 ... i_n with vertex 1 leftmost.
class BitVec {
   public:
    BitVec() = default;
    BitVec(int width, uint32_t bits);

    static BitVec zero(int width) { return BitVec(width, 0); }
    /// Parses a string of '0'/'1' characters, vertex 1 first.
    static BitVec parse(std::string_view text);
    /// Builds the set from 1-indexed vertex labels.
    static BitVec of(int width, std::initializer_list<int> vertices);
    static BitVec of(int width, const std::vector<int> &vertices);

    int width() const { return width_; }
    uint32_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int count() const { return std::popcount(bits_); }

    /// Membership of a 1-indexed vertex.
    bool has(int vertex) const { return (bits_ >> (vertex - 1)) & 1u; }
    BitVec with(int vertex) const;
    BitVec without(int vertex) const;

    /// Sorted 1-indexed vertex labels.
    std::vector<int> vertices() const;
    /// Binary string i_1 ... i_n.
    std::string str() const;
    /// Set notation, e.g. "{1,2,3}".
    std::string set_str() const;

    BitVec operator^(const BitVec &o) const;
    BitVec operator&(const BitVec &o) const;
    BitVec operator|(const BitVec &o) const;
    BitVec &operator^=(const BitVec &o);
    bool operator==(const BitVec &o) const = default;
    std::strong_ordering operator<=>(const BitVec &o) const;

    /// Inner product over GF(2).
    bool dot(const BitVec &o) const;
    bool subset_of(const BitVec &o) const { return (bits_ & ~o.bits_) == 0; }

   private:
    uint32_t bits_ = 0;
    int width_ = 0;
};

/// A vertex subset is represented by its indicator row.
using VertexSet = BitVec;

struct BitMatrix {
    int width = 0;
    std::vector<BitVec> rows;

    BitMatrix() = default;
    BitMatrix(int width, std::vector<BitVec> rows);
    static BitMatrix parse(int width, std::initializer_list<std::string_view> rows);

    /// Matrix-vector product over GF(2).
    BitVec apply(const BitVec &v) const;
};

/// A subspace of GF(2)^width held as its reduced row-echelon basis.
///
/// Each row's pivot is its lowest set column (lowest vertex index), pivots
/// are strictly increasing, and a pivot column is set in its own row only.
/// Two bases spanning the same space compare equal.
class Basis {
   public:
    Basis() = default;
    explicit Basis(int width) : width_(width) {}

    /// Reduces arbitrary spanning rows to canonical form.
    static Basis span_of(int width, const std::vector<BitVec> &rows);
    static Basis full(int width);

    int width() const { return width_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }
    const std::vector<BitVec> &rows() const { return rows_; }
    /// 0-based pivot columns, strictly increasing.
    const std::vector<int> &pivots() const { return pivots_; }
    /// Union of pivot columns as a mask.
    BitVec pivot_mask() const;

    /// Clears every pivot column of v; the result is the canonical coset
    /// representative of v modulo the span.
    BitVec reduce(const BitVec &v) const;
    bool contains(const BitVec &v) const { return reduce(v).empty(); }
    bool contains(const Basis &sub) const;

    /// All 2^dim elements of the span, ordered by the binary counter over rows.
    std::vector<BitVec> elements() const;
    /// Element selected by the binary coordinates in `code`.
    BitVec combine(uint64_t code) const;

    bool operator==(const Basis &o) const = default;
    std::string str() const;

   private:
    int width_ = 0;
    std::vector<BitVec> rows_;
    std::vector<int> pivots_;
};

struct RrefResult {
    Basis basis;
    int rank = 0;
};

RrefResult rref(const BitMatrix &m);

/// Null space {x : m x = 0}.
Basis kernel(const BitMatrix &m);

bool contains(const Basis &b, const BitVec &v);

/// Returns C with span(sub) (+) span(C) = span(super). Rows of `super` are
/// taken greedily in order whenever they are independent of span(sub) and
/// of rows already chosen. Throws std::invalid_argument if sub is not a
/// subspace of super.
Basis complement_basis(const Basis &sub, const Basis &super);

Basis intersect(const Basis &a, const Basis &b);
Basis sum(const Basis &a, const Basis &b);

/// Subspace of span(domain) annihilated by every functional
/// x -> popcount(x & f) mod 2 for f in `functionals`.
Basis kernel_of_functionals(int width, const std::vector<BitVec> &domain,
                            const std::vector<BitVec> &functionals);

}  // namespace xchain

#endif
