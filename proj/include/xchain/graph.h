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

#ifndef XCHAIN_GRAPH_H
#define XCHAIN_GRAPH_H

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xchain/gf2.h"

namespace xchain {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 1..n held as GF(2) adjacency rows.
/// Rows are symmetric with a zero diagonal.
class Graph {
   public:
    Graph() = default;
    /// Empty graph on n vertices.
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<Edge> &edges);

    int n() const { return n_; }
    /// Neighbourhood N_v of the 1-indexed vertex v.
    BitVec neighbors(int v) const;
    uint32_t row(int v) const { return adj_[v - 1]; }
    /// Raw adjacency words, index v-1 for vertex v.
    const std::vector<uint32_t> &rows() const { return adj_; }
    bool has_edge(int u, int v) const { return (adj_[u - 1] >> (v - 1)) & 1u; }
    int edge_count() const;
    /// Edges (u, v) with u < v, lexicographic.
    std::vector<Edge> edges() const;
    BitVec all() const;
    BitMatrix adjacency() const;

    /// Re-checks symmetry, zero diagonal and width; throws std::logic_error.
    void validate() const;

    bool operator==(const Graph &o) const = default;

   private:
    int n_ = 0;
    std::vector<uint32_t> adj_;
};

/// Two-sided split of the vertex set, both sides nonempty.
struct Bipartition {
    VertexSet a;
    VertexSet b;

    /// B is the complement of A within g's vertices.
    static Bipartition from_a(int n, const VertexSet &a);
    static Bipartition from_a(int n, const std::vector<int> &a_vertices);
    bool operator==(const Bipartition &o) const = default;
};

/// Named constructors: star:n, cycle:n, complete:n, path:n, empty:n,
/// k4minus1, house, bistar.
Graph named(std::string_view spec);

Graph graph_symmetric_difference(const Graph &g, const Graph &h);

Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph &g);

/// Edge-list text: first non-comment line n, then "u v" per line; '#' starts
/// a comment.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph &g);

/// Applies a relabelling: vertex v of g becomes perm[v-1] (1-indexed).
Graph relabel(const Graph &g, const std::vector<int> &perm);

struct CanonicalForm {
    Graph graph;
    /// perm[v-1] is the label of g's vertex v in `graph`.
    std::vector<int> perm;
};

/// Lexicographically minimal relabelling by brute force; n <= 8.
CanonicalForm canonical_form(const Graph &g);

/// Upper-triangle edge string (row-major over u < v) used as the
/// canonical ordering key.
std::string adjacency_key(const Graph &g);

}  // namespace xchain

#endif
