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

#include "xchain/graph.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace xchain {

namespace {

void check_vertex_count(int n) {
    if (n < 1 || n > kMaxWidth) {
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 1.." +
                                    std::to_string(kMaxWidth));
    }
}

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

// Canonical key with pair (1,2) as the most significant bit.
uint64_t key_bits(int n, const std::vector<uint32_t> &adj) {
    uint64_t key = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            key = (key << 1) | ((adj[u] >> v) & 1u);
        }
    }
    return key;
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(n, 0) { check_vertex_count(n); }

Graph Graph::from_edges(int n, const std::vector<Edge> &edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") outside 1.." + std::to_string(n));
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        g.adj_[u - 1] |= uint32_t{1} << (v - 1);
        g.adj_[v - 1] |= uint32_t{1} << (u - 1);
    }
    return g;
}

BitVec Graph::neighbors(int v) const {
    if (v < 1 || v > n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    }
    return BitVec(n_, adj_[v - 1]);
}

int Graph::edge_count() const {
    int twice = 0;
    for (uint32_t r : adj_) {
        twice += std::popcount(r);
    }
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u) {
        for (int v = u + 1; v <= n_; ++v) {
            if (has_edge(u, v)) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

BitVec Graph::all() const { return BitVec(n_, n_ == 32 ? ~uint32_t{0} : (uint32_t{1} << n_) - 1); }

BitMatrix Graph::adjacency() const {
    std::vector<BitVec> rows;
    for (int v = 1; v <= n_; ++v) {
        rows.push_back(neighbors(v));
    }
    return BitMatrix(n_, std::move(rows));
}

void Graph::validate() const {
    if (static_cast<int>(adj_.size()) != n_) {
        throw std::logic_error("adjacency row count differs from n");
    }
    for (int u = 0; u < n_; ++u) {
        if ((adj_[u] >> u) & 1u) {
            throw std::logic_error("self-loop at vertex " + std::to_string(u + 1));
        }
        if (n_ < 32 && (adj_[u] >> n_)) {
            throw std::logic_error("adjacency bits beyond n");
        }
        for (int v = 0; v < n_; ++v) {
            if (((adj_[u] >> v) & 1u) != ((adj_[v] >> u) & 1u)) {
                throw std::logic_error("asymmetric adjacency");
            }
        }
    }
}

Bipartition Bipartition::from_a(int n, const VertexSet &a) {
    if (a.width() != n) {
        throw std::invalid_argument("partition width differs from vertex count");
    }
    Bipartition p{a, a ^ Graph(n).all()};
    if (p.a.empty() || p.b.empty()) {
        throw std::invalid_argument("both sides of a bipartition must be nonempty");
    }
    return p;
}

Bipartition Bipartition::from_a(int n, const std::vector<int> &a_vertices) {
    std::vector<int> sorted = a_vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("vertex listed twice in partition");
    }
    return from_a(n, BitVec::of(n, a_vertices));
}

Graph named(std::string_view spec) {
    if (spec == "k4minus1") {
        return Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
    }
    if (spec == "house") {
        return Graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    }
    if (spec == "bistar") {
        return Graph::from_edges(5, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
    }
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("unknown graph name '" + std::string(spec) + "'");
    }
    auto kind = spec.substr(0, colon);
    int n = parse_int(spec.substr(colon + 1), "vertex count");
    check_vertex_count(n);
    std::vector<Edge> edges;
    if (kind == "star") {
        for (int v = 2; v <= n; ++v) {
            edges.emplace_back(1, v);
        }
    } else if (kind == "cycle") {
        if (n < 3) {
            throw std::invalid_argument("cycle needs at least 3 vertices");
        }
        for (int v = 1; v < n; ++v) {
            edges.emplace_back(v, v + 1);
        }
        edges.emplace_back(n, 1);
    } else if (kind == "complete") {
        for (int u = 1; u <= n; ++u) {
            for (int v = u + 1; v <= n; ++v) {
                edges.emplace_back(u, v);
            }
        }
    } else if (kind == "path") {
        for (int v = 1; v < n; ++v) {
            edges.emplace_back(v, v + 1);
        }
    } else if (kind != "empty") {
        throw std::invalid_argument("unknown graph family '" + std::string(kind) + "'");
    }
    return Graph::from_edges(n, edges);
}

Graph graph_symmetric_difference(const Graph &g, const Graph &h) {
    if (g.n() != h.n()) {
        throw std::invalid_argument("graph sizes differ: " + std::to_string(g.n()) + " vs " + std::to_string(h.n()));
    }
    std::vector<Edge> edges;
    for (int u = 1; u <= g.n(); ++u) {
        for (int v = u + 1; v <= g.n(); ++v) {
            if (g.has_edge(u, v) != h.has_edge(u, v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(g.n(), edges);
}

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) {
        text.remove_prefix(10);
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("graph6: empty input");
    }
    int c0 = static_cast<unsigned char>(text[0]);
    if (c0 < 63 || c0 > 126) {
        throw std::invalid_argument("graph6: malformed header");
    }
    int n = c0 - 63;
    if (n == 63) {
        throw std::invalid_argument("graph6: vertex counts above 62 are not supported");
    }
    check_vertex_count(n);
    size_t bit_count = static_cast<size_t>(n) * (n - 1) / 2;
    size_t byte_count = (bit_count + 5) / 6;
    if (text.size() != 1 + byte_count) {
        throw std::invalid_argument("graph6: expected " + std::to_string(byte_count) + " payload bytes, got " +
                                    std::to_string(text.size() - 1));
    }
    std::vector<Edge> edges;
    size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int c = static_cast<unsigned char>(text[1 + k / 6]);
            if (c < 63 || c > 126) {
                throw std::invalid_argument("graph6: payload byte out of range");
            }
            if (((c - 63) >> (5 - k % 6)) & 1) {
                edges.emplace_back(i + 1, j + 1);
            }
        }
    }
    for (size_t pad = k; pad < byte_count * 6; ++pad) {
        int c = static_cast<unsigned char>(text[1 + pad / 6]);
        if (((c - 63) >> (5 - pad % 6)) & 1) {
            throw std::invalid_argument("graph6: nonzero padding bits");
        }
    }
    return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph &g) {
    std::string out(1, static_cast<char>(63 + g.n()));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < g.n(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i + 1, j + 1) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) {
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    }
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        if (n < 0) {
            if (tok.size() != 1) {
                throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected vertex count");
            }
            n = parse_int(tok[0], "vertex count");
            check_vertex_count(n);
            continue;
        }
        if (tok.size() != 2) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected 'u v'");
        }
        edges.emplace_back(parse_int(tok[0], "vertex"), parse_int(tok[1], "vertex"));
    }
    if (n < 0) {
        throw std::invalid_argument("edge list: missing vertex count");
    }
    return Graph::from_edges(n, edges);
}

std::string emit_edge_list(const Graph &g) {
    std::string out = std::to_string(g.n()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

Graph relabel(const Graph &g, const std::vector<int> &perm) {
    if (static_cast<int>(perm.size()) != g.n()) {
        throw std::invalid_argument("permutation size differs from vertex count");
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(perm[u - 1], perm[v - 1]);
    }
    return Graph::from_edges(g.n(), edges);
}

std::string adjacency_key(const Graph &g) {
    std::string key;
    for (int u = 1; u <= g.n(); ++u) {
        for (int v = u + 1; v <= g.n(); ++v) {
            key.push_back(g.has_edge(u, v) ? '1' : '0');
        }
    }
    return key;
}

CanonicalForm canonical_form(const Graph &g) {
    int n = g.n();
    if (n > 8) {
        throw std::invalid_argument("canonical_form is brute force and limited to n <= 8");
    }
    // order[k] = original vertex (0-based) placed at new position k.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<uint32_t> adj(n);
    uint64_t best_key = ~uint64_t{0};
    std::vector<int> best_order = order;
    do {
        for (int k = 0; k < n; ++k) {
            uint32_t row = 0;
            uint32_t orig = g.row(order[k] + 1);
            for (int m = 0; m < n; ++m) {
                row |= ((orig >> order[m]) & 1u) << m;
            }
            adj[k] = row;
        }
        uint64_t key = key_bits(n, adj);
        if (key < best_key) {
            best_key = key;
            best_order = order;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) {
        perm[best_order[k]] = k + 1;
    }
    return {relabel(g, perm), perm};
}

}  // namespace xchain
