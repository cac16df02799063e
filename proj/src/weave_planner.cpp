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

#include "graphweaver/weave_planner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "graphweaver/errors.hpp"

namespace gw {

std::vector<Edge> trail_edges(const Trail &trail) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < trail.size(); i++)
        out.push_back({trail[i], trail[i + 1]});
    return out;
}

const char *violation_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::GraphHashMismatch:
            return "graph_hash_mismatch";
        case ViolationKind::UnknownVertex:
            return "unknown_vertex";
        case ViolationKind::SelfLink:
            return "self_link";
        case ViolationKind::RetracedEdge:
            return "retraced_edge";
        case ViolationKind::ForeignEdge:
            return "foreign_edge";
        case ViolationKind::MissingEdge:
            return "missing_edge";
        case ViolationKind::AnchorDiscontinuity:
            return "anchor_discontinuity";
        case ViolationKind::LinkWithoutSpider:
            return "link_without_spider";
        case ViolationKind::NestedAttach:
            return "nested_attach";
        case ViolationKind::DetachWithoutAttach:
            return "detach_without_attach";
        case ViolationKind::UnclosedAttach:
            return "unclosed_attach";
    }
    return "unknown";
}

std::size_t min_trail_count(const GraphSpec &g) {
    auto label = g.component_labels();
    std::size_t num_components = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::size_t> odd(num_components, 0);
    std::vector<bool> has_edge(num_components, false);
    for (std::size_t v = 0; v < g.num_vertices(); v++) {
        if (g.degree(v) > 0)
            has_edge[label[v]] = true;
        if (g.degree(v) % 2 == 1)
            odd[label[v]]++;
    }
    std::size_t total = 0;
    for (std::size_t c = 0; c < num_components; c++)
        if (has_edge[c])
            total += std::max<std::size_t>(1, odd[c] / 2);
    return total;
}

namespace {

struct MultiEdge {
    std::size_t a;
    std::size_t b;
    bool is_virtual;
};

// Hierholzer on a multigraph whose vertices all have even degree. Returns the
// closed walk from `start` as (vertex, edge used to arrive) pairs; the first
// entry has no incoming edge.
std::vector<std::pair<std::size_t, std::size_t>> euler_circuit(
    std::size_t start, const std::vector<MultiEdge> &edges,
    const std::vector<std::vector<std::size_t>> &incident) {
    constexpr auto none = static_cast<std::size_t>(-1);
    std::vector<bool> used(edges.size(), false);
    std::vector<std::size_t> cursor(incident.size(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack{{start, none}};
    std::vector<std::pair<std::size_t, std::size_t>> popped;
    while (!stack.empty()) {
        std::size_t v = stack.back().first;
        auto &cur = cursor[v];
        while (cur < incident[v].size() && used[incident[v][cur]])
            cur++;
        if (cur == incident[v].size()) {
            popped.push_back(stack.back());
            stack.pop_back();
            continue;
        }
        std::size_t e = incident[v][cur];
        used[e] = true;
        std::size_t w = edges[e].a == v ? edges[e].b : edges[e].a;
        stack.emplace_back(w, e);
    }
    // popped[k].second joins popped[k] to popped[k + 1], and the last entry
    // popped is the start. Reversed, entry i arrives from entry i - 1 via its
    // own edge.
    std::reverse(popped.begin(), popped.end());
    return popped;
}

}  // namespace

std::vector<Trail> decompose_trails(const GraphSpec &g) {
    const std::size_t nv = g.num_vertices();
    std::vector<MultiEdge> edges;
    std::vector<std::vector<std::size_t>> incident(nv);
    auto add = [&](std::size_t a, std::size_t b, bool is_virtual) {
        incident[a].push_back(edges.size());
        incident[b].push_back(edges.size());
        edges.push_back({a, b, is_virtual});
    };
    for (const auto &e : g.edges())
        add(*g.index_of(e.u), *g.index_of(e.v), false);

    auto label = g.component_labels();
    std::size_t num_components = nv == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<std::size_t>> odd_by_component(num_components);
    std::vector<std::size_t> start(num_components, nv);
    for (std::size_t v = 0; v < nv; v++) {
        if (g.degree(v) == 0)
            continue;
        if (start[label[v]] == nv)
            start[label[v]] = v;
        if (g.degree(v) % 2 == 1)
            odd_by_component[label[v]].push_back(v);
    }
    for (const auto &odd : odd_by_component)
        for (std::size_t k = 0; k + 1 < odd.size(); k += 2)
            add(odd[k], odd[k + 1], true);

    std::vector<Trail> trails;
    for (std::size_t c = 0; c < num_components; c++) {
        if (start[c] == nv)
            continue;
        auto walk = euler_circuit(start[c], edges, incident);
        const std::size_t len = walk.size() - 1;  // number of edges
        std::size_t first_virtual = 0;
        for (std::size_t i = 1; i <= len && first_virtual == 0; i++)
            if (edges[walk[i].second].is_virtual)
                first_virtual = i;
        if (first_virtual == 0) {
            Trail t;
            for (const auto &[v, e] : walk)
                t.push_back(g.vertices()[v]);
            trails.push_back(std::move(t));
            continue;
        }
        // Rotate so the walk starts right after a virtual edge, then cut at
        // every virtual edge. Virtual edges form a matching, so no two are
        // adjacent and every piece is non-empty.
        Trail current{g.vertices()[walk[first_virtual].first]};
        for (std::size_t k = 1; k <= len; k++) {
            std::size_t i = (first_virtual + k - 1) % len + 1;
            const auto &[v, e] = walk[i];
            if (edges[e].is_virtual) {
                trails.push_back(std::move(current));
                current = {g.vertices()[v]};
            } else {
                current.push_back(g.vertices()[v]);
            }
        }
    }
    return trails;
}

WeaveSchedule plan_schedule(const GraphSpec &g, const PlannerOptions &opts) {
    WeaveSchedule s;
    s.graph_hash = g.hash();
    s.vertices = g.vertices();
    s.options = opts;

    std::set<std::pair<std::size_t, std::size_t>> block_edges;
    for (std::size_t b = 0; b < opts.blocks.size(); b++) {
        const auto &chain = opts.blocks[b];
        if (chain.size() < 2)
            throw PlanningError("block " + std::to_string(b) + " needs at least two vertices");
        step::PrepareBlock block;
        for (std::size_t i = 0; i + 1 < chain.size(); i++) {
            const auto &u = chain[i];
            const auto &v = chain[i + 1];
            if (!g.has_edge(u, v))
                throw PlanningError("block " + std::to_string(b) + " uses (" + u + ", " + v +
                                    ") which is not an edge of the graph");
            auto a = *g.index_of(u);
            auto c = *g.index_of(v);
            if (!block_edges.emplace(std::min(a, c), std::max(a, c)).second)
                throw PlanningError("block " + std::to_string(b) + " overlaps an earlier block at (" + u + ", " +
                                    v + ")");
            block.edges.push_back({u, v});
        }
        s.steps.emplace_back(std::move(block));
    }

    GraphSpec residual;
    for (const auto &v : g.vertices())
        residual.add_vertex(v);
    for (const auto &e : g.edges()) {
        auto a = *g.index_of(e.u);
        auto c = *g.index_of(e.v);
        if (!block_edges.contains({std::min(a, c), std::max(a, c)}))
            residual.add_edge(e.u, e.v);
    }

    for (const auto &trail : decompose_trails(residual)) {
        s.steps.emplace_back(step::Attach{trail.front()});
        for (std::size_t i = 0; i + 1 < trail.size(); i++)
            s.steps.emplace_back(step::Link{trail[i], trail[i + 1]});
        s.steps.emplace_back(step::Detach{trail.back()});
    }
    return s;
}

std::vector<Violation> validate_schedule(const WeaveSchedule &s, const GraphSpec &g) {
    std::vector<Violation> out;
    auto report = [&](ViolationKind kind, std::optional<std::size_t> at, std::string msg) {
        out.push_back({kind, at, std::move(msg)});
    };
    if (s.graph_hash != g.hash())
        report(ViolationKind::GraphHashMismatch, std::nullopt,
               "schedule hash " + s.graph_hash + " does not match graph hash " + g.hash());

    std::set<std::pair<std::size_t, std::size_t>> covered;
    auto known = [&](const VertexId &v, std::size_t at) {
        if (g.has_vertex(v))
            return true;
        report(ViolationKind::UnknownVertex, at, "vertex " + v + " is not in the graph");
        return false;
    };
    auto cover = [&](const VertexId &u, const VertexId &v, std::size_t at) {
        if (!known(u, at) || !known(v, at))
            return;
        if (u == v) {
            report(ViolationKind::SelfLink, at, "link from " + u + " to itself");
            return;
        }
        if (!g.has_edge(u, v)) {
            report(ViolationKind::ForeignEdge, at, "(" + u + ", " + v + ") is not an edge of the graph");
            return;
        }
        auto a = *g.index_of(u);
        auto b = *g.index_of(v);
        if (!covered.emplace(std::min(a, b), std::max(a, b)).second)
            report(ViolationKind::RetracedEdge, at, "retraced edge (" + u + ", " + v + ")");
    };

    std::optional<VertexId> anchor;
    std::optional<std::size_t> open_attach;
    for (std::size_t i = 0; i < s.steps.size(); i++) {
        const auto &st = s.steps[i];
        if (const auto *blk = std::get_if<step::PrepareBlock>(&st)) {
            for (const auto &e : blk->edges)
                cover(e.u, e.v, i);
        } else if (const auto *att = std::get_if<step::Attach>(&st)) {
            known(att->p, i);
            if (anchor)
                report(ViolationKind::NestedAttach, i,
                       "attach at " + att->p + " while the spider from step " + std::to_string(*open_attach) +
                           " is still attached");
            anchor = att->p;
            open_attach = i;
        } else if (const auto *lnk = std::get_if<step::Link>(&st)) {
            if (!anchor)
                report(ViolationKind::LinkWithoutSpider, i, "link (" + lnk->p + ", " + lnk->r + ") with no spider");
            else if (*anchor != lnk->p)
                report(ViolationKind::AnchorDiscontinuity, i,
                       "link starts at " + lnk->p + " but the spider is anchored at " + *anchor);
            cover(lnk->p, lnk->r, i);
            if (anchor)
                anchor = lnk->r;
        } else {
            const auto &det = std::get<step::Detach>(st);
            if (!anchor) {
                report(ViolationKind::DetachWithoutAttach, i, "detach at " + det.r + " with no spider");
            } else if (*anchor != det.r) {
                report(ViolationKind::AnchorDiscontinuity, i,
                       "detach names " + det.r + " but the spider is anchored at " + *anchor);
            }
            anchor.reset();
            open_attach.reset();
        }
    }
    if (anchor)
        report(ViolationKind::UnclosedAttach, open_attach, "spider attached at step " +
                                                              std::to_string(*open_attach) + " is never detached");
    for (auto [a, b] : g.canonical_edges())
        if (!covered.contains({a, b}))
            report(ViolationKind::MissingEdge, std::nullopt,
                   "edge (" + g.vertices()[a] + ", " + g.vertices()[b] + ") is never bonded");
    return out;
}

GraphSpec implied_graph(const WeaveSchedule &s) {
    GraphSpec g;
    for (const auto &v : s.vertices)
        g.add_vertex(v);
    auto need = [&](const VertexId &v) {
        if (!g.has_vertex(v))
            throw GraphError("schedule names undeclared vertex " + v);
    };
    for (const auto &st : s.steps) {
        if (const auto *blk = std::get_if<step::PrepareBlock>(&st)) {
            for (const auto &e : blk->edges) {
                need(e.u);
                need(e.v);
                g.add_edge(e.u, e.v);
            }
        } else if (const auto *lnk = std::get_if<step::Link>(&st)) {
            need(lnk->p);
            need(lnk->r);
            g.add_edge(lnk->p, lnk->r);
        } else if (const auto *att = std::get_if<step::Attach>(&st)) {
            need(att->p);
        } else {
            need(std::get<step::Detach>(st).r);
        }
    }
    return g;
}

CountReport formula_counts(std::int64_t n) {
    if (n < 2)
        throw std::domain_error("cubic lattice size must be >= 2, got " + std::to_string(n));
    const std::int64_t bulk = (n - 1) * n * n;
    CountReport r;
    r.cascade_ops = 3 * bulk + 1;
    r.box_ops = n % 2 == 0 ? 4 * bulk - 2 * n + 1 : 4 * bulk - n + 1;
    r.direct_ops = 6 * bulk;
    return r;
}

std::int64_t count_operations(const WeaveSchedule &s) {
    std::int64_t total = 0;
    for (const auto &st : s.steps) {
        if (const auto *blk = std::get_if<step::PrepareBlock>(&st)) {
            auto k = static_cast<std::int64_t>(blk->edges.size());
            total += k == 1 ? 1 : k + 1;
        } else if (!std::holds_alternative<step::Detach>(st)) {
            total += 1;
        }
    }
    return total;
}

}  // namespace gw
