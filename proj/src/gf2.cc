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

#include "xchain/gf2.h"

#include <algorithm>
#include <stdexcept>

namespace xchain {

namespace {

uint32_t width_mask(int width) { return width >= 32 ? ~uint32_t{0} : ((uint32_t{1} << width) - 1); }

void check_width(int width) {
    if (width < 0 || width > kMaxWidth) {
        throw std::invalid_argument("bit width " + std::to_string(width) + " outside 0.." +
                                    std::to_string(kMaxWidth));
    }
}

void check_same_width(int a, int b) {
    if (a != b) {
        throw std::invalid_argument("width mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

// In-place reduced row echelon form over raw words with lowest-bit pivots.
// Returns the pivot columns; `rows` is truncated to the nonzero rows.
std::vector<int> reduce_rows(std::vector<uint32_t> &rows, int width) {
    std::vector<int> pivots;
    size_t next = 0;
    for (int col = 0; col < width && next < rows.size(); ++col) {
        uint32_t bit = uint32_t{1} << col;
        size_t found = next;
        while (found < rows.size() && !(rows[found] & bit)) {
            ++found;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != next && (rows[r] & bit)) {
                rows[r] ^= rows[next];
            }
        }
        pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    return pivots;
}

}  // namespace

BitVec::BitVec(int width, uint32_t bits) : bits_(bits), width_(width) {
    check_width(width);
    if (bits & ~width_mask(width)) {
        throw std::invalid_argument("bits set above width " + std::to_string(width));
    }
}

BitVec BitVec::parse(std::string_view text) {
    check_width(static_cast<int>(text.size()));
    uint32_t bits = 0;
    for (size_t k = 0; k < text.size(); ++k) {
        if (text[k] == '1') {
            bits |= uint32_t{1} << k;
        } else if (text[k] != '0') {
            throw std::invalid_argument("not a binary string: '" + std::string(text) + "'");
        }
    }
    return BitVec(static_cast<int>(text.size()), bits);
}

BitVec BitVec::of(int width, std::initializer_list<int> vertices) {
    return of(width, std::vector<int>(vertices));
}

BitVec BitVec::of(int width, const std::vector<int> &vertices) {
    check_width(width);
    uint32_t bits = 0;
    for (int v : vertices) {
        if (v < 1 || v > width) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." + std::to_string(width));
        }
        bits |= uint32_t{1} << (v - 1);
    }
    return BitVec(width, bits);
}

BitVec BitVec::with(int vertex) const { return BitVec(width_, bits_ | (uint32_t{1} << (vertex - 1))); }

BitVec BitVec::without(int vertex) const { return BitVec(width_, bits_ & ~(uint32_t{1} << (vertex - 1))); }

std::vector<int> BitVec::vertices() const {
    std::vector<int> out;
    for (uint32_t b = bits_; b; b &= b - 1) {
        out.push_back(std::countr_zero(b) + 1);
    }
    return out;
}

std::string BitVec::str() const {
    std::string s(width_, '0');
    for (int k = 0; k < width_; ++k) {
        if ((bits_ >> k) & 1u) {
            s[k] = '1';
        }
    }
    return s;
}

std::string BitVec::set_str() const {
    std::string s = "{";
    bool first = true;
    for (int v : vertices()) {
        if (!first) {
            s += ",";
        }
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

BitVec BitVec::operator^(const BitVec &o) const {
    check_same_width(width_, o.width_);
    return BitVec(width_, bits_ ^ o.bits_);
}

BitVec BitVec::operator&(const BitVec &o) const {
    check_same_width(width_, o.width_);
    return BitVec(width_, bits_ & o.bits_);
}

BitVec BitVec::operator|(const BitVec &o) const {
    check_same_width(width_, o.width_);
    return BitVec(width_, bits_ | o.bits_);
}

BitVec &BitVec::operator^=(const BitVec &o) {
    check_same_width(width_, o.width_);
    bits_ ^= o.bits_;
    return *this;
}

std::strong_ordering BitVec::operator<=>(const BitVec &o) const {
    if (auto c = width_ <=> o.width_; c != 0) {
        return c;
    }
    return bits_ <=> o.bits_;
}

bool BitVec::dot(const BitVec &o) const {
    check_same_width(width_, o.width_);
    return std::popcount(bits_ & o.bits_) & 1;
}

BitMatrix::BitMatrix(int width, std::vector<BitVec> rows) : width(width), rows(std::move(rows)) {
    check_width(width);
    for (const auto &r : this->rows) {
        check_same_width(width, r.width());
    }
}

BitMatrix BitMatrix::parse(int width, std::initializer_list<std::string_view> rows) {
    std::vector<BitVec> out;
    for (auto r : rows) {
        out.push_back(BitVec::parse(r));
    }
    return BitMatrix(width, std::move(out));
}

BitVec BitMatrix::apply(const BitVec &v) const {
    check_same_width(width, v.width());
    uint32_t out = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].dot(v)) {
            out |= uint32_t{1} << r;
        }
    }
    return BitVec(static_cast<int>(rows.size()), out);
}

Basis Basis::span_of(int width, const std::vector<BitVec> &rows) {
    check_width(width);
    std::vector<uint32_t> raw;
    raw.reserve(rows.size());
    for (const auto &r : rows) {
        check_same_width(width, r.width());
        raw.push_back(r.bits());
    }
    Basis b(width);
    b.pivots_ = reduce_rows(raw, width);
    for (uint32_t r : raw) {
        b.rows_.emplace_back(width, r);
    }
    return b;
}

Basis Basis::full(int width) {
    std::vector<BitVec> rows;
    for (int k = 0; k < width; ++k) {
        rows.emplace_back(width, uint32_t{1} << k);
    }
    return span_of(width, rows);
}

BitVec Basis::pivot_mask() const {
    uint32_t m = 0;
    for (int p : pivots_) {
        m |= uint32_t{1} << p;
    }
    return BitVec(width_, m);
}

BitVec Basis::reduce(const BitVec &v) const {
    check_same_width(width_, v.width());
    uint32_t x = v.bits();
    for (size_t r = 0; r < rows_.size(); ++r) {
        if ((x >> pivots_[r]) & 1u) {
            x ^= rows_[r].bits();
        }
    }
    return BitVec(width_, x);
}

bool Basis::contains(const Basis &sub) const {
    check_same_width(width_, sub.width_);
    return std::all_of(sub.rows_.begin(), sub.rows_.end(), [&](const BitVec &r) { return contains(r); });
}

BitVec Basis::combine(uint64_t code) const {
    uint32_t x = 0;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if ((code >> r) & 1u) {
            x ^= rows_[r].bits();
        }
    }
    return BitVec(width_, x);
}

std::vector<BitVec> Basis::elements() const {
    if (dim() > 24) {
        throw std::length_error("refusing to enumerate a span of dimension " + std::to_string(dim()));
    }
    std::vector<BitVec> out;
    out.reserve(size_t{1} << dim());
    for (uint64_t code = 0; code < (uint64_t{1} << dim()); ++code) {
        out.push_back(combine(code));
    }
    return out;
}

std::string Basis::str() const {
    std::string s = "{";
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) {
            s += ",";
        }
        s += rows_[r].set_str();
    }
    return s + "}";
}

RrefResult rref(const BitMatrix &m) {
    Basis b = Basis::span_of(m.width, m.rows);
    int rank = b.dim();
    return {std::move(b), rank};
}

Basis kernel(const BitMatrix &m) {
    Basis reduced = Basis::span_of(m.width, m.rows);
    uint32_t pivots = reduced.pivot_mask().bits();
    std::vector<BitVec> out;
    for (int free = 0; free < m.width; ++free) {
        if ((pivots >> free) & 1u) {
            continue;
        }
        uint32_t x = uint32_t{1} << free;
        for (int r = 0; r < reduced.dim(); ++r) {
            if ((reduced.rows()[r].bits() >> free) & 1u) {
                x |= uint32_t{1} << reduced.pivots()[r];
            }
        }
        out.emplace_back(m.width, x);
    }
    return Basis::span_of(m.width, out);
}

bool contains(const Basis &b, const BitVec &v) { return b.contains(v); }

Basis complement_basis(const Basis &sub, const Basis &super) {
    check_same_width(sub.width(), super.width());
    if (!super.contains(sub)) {
        throw std::invalid_argument("complement_basis: " + sub.str() + " is not contained in " + super.str());
    }
    Basis acc = sub;
    std::vector<BitVec> chosen;
    for (const auto &r : super.rows()) {
        if (acc.contains(r)) {
            continue;
        }
        chosen.push_back(r);
        auto rows = acc.rows();
        rows.push_back(r);
        acc = Basis::span_of(super.width(), rows);
    }
    return Basis::span_of(super.width(), chosen);
}

Basis intersect(const Basis &a, const Basis &b) {
    check_same_width(a.width(), b.width());
    // Zassenhaus: rows (x | x) for x in a, (y | 0) for y in b, eliminated on
    // the upper half first; rows left with an empty upper half span a ∩ b.
    std::vector<uint64_t> rows;
    for (const auto &x : a.rows()) {
        rows.push_back((uint64_t{x.bits()} << 32) | x.bits());
    }
    for (const auto &y : b.rows()) {
        rows.push_back(uint64_t{y.bits()} << 32);
    }
    size_t next = 0;
    for (int col = 63; col >= 0 && next < rows.size(); --col) {
        uint64_t bit = uint64_t{1} << col;
        size_t found = next;
        while (found < rows.size() && !(rows[found] & bit)) {
            ++found;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (size_t r = next + 1; r < rows.size(); ++r) {
            if (rows[r] & bit) {
                rows[r] ^= rows[next];
            }
        }
        ++next;
    }
    std::vector<BitVec> out;
    for (size_t r = 0; r < next; ++r) {
        if ((rows[r] >> 32) == 0) {
            out.emplace_back(a.width(), static_cast<uint32_t>(rows[r]));
        }
    }
    return Basis::span_of(a.width(), out);
}

Basis sum(const Basis &a, const Basis &b) {
    check_same_width(a.width(), b.width());
    auto rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return Basis::span_of(a.width(), rows);
}

Basis kernel_of_functionals(int width, const std::vector<BitVec> &domain, const std::vector<BitVec> &functionals) {
    int d = static_cast<int>(domain.size());
    check_width(d);
    std::vector<BitVec> constraint_rows;
    for (const auto &f : functionals) {
        uint32_t row = 0;
        for (int i = 0; i < d; ++i) {
            if (domain[i].dot(f)) {
                row |= uint32_t{1} << i;
            }
        }
        constraint_rows.emplace_back(d, row);
    }
    Basis coords = kernel(BitMatrix(d, std::move(constraint_rows)));
    std::vector<BitVec> out;
    for (const auto &c : coords.rows()) {
        BitVec x = BitVec::zero(width);
        for (int i = 0; i < d; ++i) {
            if ((c.bits() >> i) & 1u) {
                x ^= domain[i];
            }
        }
        out.push_back(x);
    }
    return Basis::span_of(width, out);
}

}  // namespace xchain
