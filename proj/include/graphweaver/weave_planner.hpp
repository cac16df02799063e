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

// Spider-trail planning.
//
// A spider photon entangles one new bond per link step and must never walk an
// edge that is already bonded (a second CZ would undo it). The set of links a
// single spider performs is therefore a trail: a walk with no repeated edge,
// vertices may repeat. Covering a graph with the fewest trails is the Euler
// trail-cover problem: a connected component with 2k odd-degree vertices needs
// max(1, k) trails.

#ifndef GRAPHWEAVER_WEAVE_PLANNER_HPP
#define GRAPHWEAVER_WEAVE_PLANNER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphweaver/graph_model.hpp"

namespace gw {

/// Vertex sequence v0..vk, k >= 1, implying edges (v_i, v_{i+1}).
using Trail = std::vector<VertexId>;

/// Edges walked by a trail, in order.
std::vector<Edge> trail_edges(const Trail &trail);

namespace step {
/// Bonds prepared up front, outside the spider trails (e.g. short chains).
struct PrepareBlock {
    std::vector<Edge> edges;
    bool operator==(const PrepareBlock &) const = default;
};
/// Entangle a fresh spider to p; p becomes the anchor.
struct Attach {
    VertexId p;
    bool operator==(const Attach &) const = default;
};
/// Bond the anchor p to r; the anchor moves to r.
struct Link {
    VertexId p;
    VertexId r;
    bool operator==(const Link &) const = default;
};
/// Measure the spider out; r is the anchor it is attached to.
struct Detach {
    VertexId r;
    bool operator==(const Detach &) const = default;
};
}  // namespace step

using Step = std::variant<step::PrepareBlock, step::Attach, step::Link, step::Detach>;

struct PlannerOptions {
    /// Pre-linked chains (vertex sequences) emitted as PrepareBlock steps and
    /// excluded from the spider trails.
    std::vector<std::vector<VertexId>> blocks;
};

struct WeaveSchedule {
    std::string graph_hash;
    /// Vertex list of the target graph; isolated vertices appear only here.
    std::vector<VertexId> vertices;
    std::vector<Step> steps;
    PlannerOptions options;
};

struct CountReport {
    std::int64_t cascade_ops = 0;
    std::int64_t box_ops = 0;
    std::int64_t direct_ops = 0;
    std::optional<std::int64_t> schedule_ops;
};

enum class ViolationKind {
    GraphHashMismatch,
    UnknownVertex,
    SelfLink,
    RetracedEdge,
    ForeignEdge,
    MissingEdge,
    AnchorDiscontinuity,
    LinkWithoutSpider,
    NestedAttach,
    DetachWithoutAttach,
    UnclosedAttach,
};

struct Violation {
    ViolationKind kind;
    /// Index of the offending step; absent for whole-schedule violations.
    std::optional<std::size_t> step;
    std::string message;
};

const char *violation_name(ViolationKind kind);

std::size_t min_trail_count(const GraphSpec &g);

/// Minimum edge-disjoint trail cover. Odd-degree vertices of each component
/// are paired in vertex order with virtual edges, a Hierholzer circuit is
/// built on the augmented multigraph and then cut at the virtual edges.
std::vector<Trail> decompose_trails(const GraphSpec &g);

/// Blocks first, then one Attach / Link... / Detach run per trail of the
/// residual graph. Throws PlanningError for blocks that use non-edges, repeat
/// an edge, or overlap another block.
WeaveSchedule plan_schedule(const GraphSpec &g, const PlannerOptions &opts = {});

/// Every violated schedule invariant; an empty result means the schedule
/// realises exactly the edge set of g.
std::vector<Violation> validate_schedule(const WeaveSchedule &s, const GraphSpec &g);

/// Graph implied by a schedule: its vertex list plus every PrepareBlock and
/// Link edge. Throws GraphError if the steps repeat an edge or name an
/// undeclared vertex.
GraphSpec implied_graph(const WeaveSchedule &s);

/// Entangler operations for an n x n x n cubic lattice under the cascade,
/// box-by-box and direct-CZ strategies. Throws std::domain_error for n < 2.
CountReport formula_counts(std::int64_t n);

/// Entangler invocations a schedule performs: Attach 1, Link 1, Detach 0,
/// PrepareBlock of k edges 1 if k == 1 (ancilla-free Bell pair) else k + 1.
std::int64_t count_operations(const WeaveSchedule &s);

}  // namespace gw

#endif
