// Copyright 2026 graphweaver Contributors
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

// Target graphs for graph-state synthesis.
//
// A GraphSpec is a simple undirected graph over opaque string vertex ids.
// Vertex order is insertion order and every algorithm downstream iterates in
// that order, so planning and simulation are reproducible.
//
// Lattice id schemes (all coordinates 0-based):
//   Square(rows, cols)    "r.c", row-major; 4-neighbour grid.
//   Honeycomb(rows, cols) "r.c", row-major brick wall: every horizontal bond
//                         (r,c)-(r,c+1), plus the vertical bond (r,c)-(r+1,c)
//                         whenever r+c is even. Every interior vertex then has
//                         degree 3, which is the hexagonal (alveolate) lattice.
//   Cubic(n)              "x.y.z", x slowest; 6-neighbour grid.

#ifndef GRAPHWEAVER_GRAPH_MODEL_HPP
#define GRAPHWEAVER_GRAPH_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace gw {

using VertexId = std::string;

/// Undirected edge between two declared vertices, stored in the order given.
struct Edge {
    VertexId u;
    VertexId v;

    bool operator==(const Edge &other) const = default;
};

class GraphSpec {
   public:
    GraphSpec() = default;

    /// Adds a vertex; returns its index. Re-adding an existing id is a no-op.
    std::size_t add_vertex(const VertexId &id);
    /// Adds the edge {u, v}. Throws GraphError on self-loops, duplicates or
    /// undeclared endpoints.
    void add_edge(const VertexId &u, const VertexId &v);

    const std::vector<VertexId> &vertices() const { return vertices_; }
    const std::vector<Edge> &edges() const { return edges_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    bool has_vertex(std::string_view id) const;
    bool has_edge(std::string_view u, std::string_view v) const;
    std::optional<std::size_t> index_of(std::string_view id) const;
    std::size_t degree(std::size_t vertex) const { return adjacency_[vertex].size(); }
    /// Neighbour indices in edge insertion order.
    const std::vector<std::size_t> &neighbors(std::size_t vertex) const { return adjacency_[vertex]; }

    /// Edges as (min index, max index) pairs, sorted. Two graphs with the same
    /// vertex list have the same edge set iff these agree.
    std::vector<std::pair<std::size_t, std::size_t>> canonical_edges() const;

    /// Connected-component label per vertex, numbered in vertex order.
    std::vector<std::size_t> component_labels() const;

    /// FNV-1a over the vertex list and canonical edge set, as 16 hex digits.
    std::string hash() const;

   private:
    static std::uint64_t edge_key(std::size_t a, std::size_t b);

    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::unordered_map<VertexId, std::size_t> index_;
    std::unordered_map<std::uint64_t, std::size_t> edge_index_;
};

struct Square {
    std::size_t rows = 0;
    std::size_t cols = 0;
};
struct Honeycomb {
    std::size_t rows = 0;
    std::size_t cols = 0;
};
struct Cubic {
    std::size_t n = 0;
};
using LatticeKind = std::variant<Square, Honeycomb, Cubic>;

/// Builds the lattice graph. Throws GraphError if any dimension is zero.
GraphSpec make_lattice(const LatticeKind &kind);

/// Closed-form edge count of a lattice (no graph is built).
std::size_t lattice_edge_count(const LatticeKind &kind);

/// Parses "square:RxC", "honeycomb:RxC" or "cubic:N".
LatticeKind parse_lattice(std::string_view text);
std::string lattice_name(const LatticeKind &kind);

/// Parses "u v" lines. Blank lines and '#' comments are skipped; a line with a
/// single token declares an isolated vertex. Throws ParseError on self-loops,
/// duplicate edges and lines with more than two tokens.
GraphSpec parse_edge_list(std::string_view text);
std::string to_edge_list(const GraphSpec &g);

/// Vertices of odd degree, in vertex order.
std::vector<VertexId> odd_degree_vertices(const GraphSpec &g);

/// Undirected DOT text; vertices first (so isolated ones survive), then edges.
std::string to_dot(const GraphSpec &g);
/// Parses the subset of DOT that to_dot emits: one undirected graph with node
/// statements and `--` edge chains, quoted or bare ids, `//` and `#` comments.
/// Attribute lists are skipped.
GraphSpec parse_dot(std::string_view text);

}  // namespace gw

#endif
