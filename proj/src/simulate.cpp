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

#include "graphweaver/simulate.hpp"

#include <algorithm>
#include <chrono>

#include "graphweaver/errors.hpp"
#include "json.hpp"

namespace gw {

SymbolicGraphState::SymbolicGraphState(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i < vertices_.size(); i++)
        index_.emplace(vertices_[i], i);
}

std::size_t SymbolicGraphState::index(const VertexId &v) const {
    auto it = index_.find(v);
    if (it == index_.end())
        throw ContractError("vertex '" + v + "' is not in the register");
    return it->second;
}

void SymbolicGraphState::toggle(const VertexId &u, const VertexId &v) {
    auto a = index(u);
    auto b = index(v);
    if (a == b)
        throw ContractError("CZ needs two distinct vertices, got '" + u + "' twice");
    std::pair key{std::min(a, b), std::max(a, b)};
    if (!edges_.erase(key))
        edges_.insert(key);
}

void SymbolicGraphState::attach(const VertexId &p) {
    index(p);
    if (anchor_)
        throw ContractError("a spider is already anchored at '" + *anchor_ + "'");
    anchor_ = p;
}

void SymbolicGraphState::link(const VertexId &p, const VertexId &r) {
    if (!anchor_ || *anchor_ != p)
        throw ContractError("link from '" + p + "' but the spider is " +
                            (anchor_ ? "anchored at '" + *anchor_ + "'" : std::string("not attached")));
    toggle(p, r);
    anchor_ = r;
}

void SymbolicGraphState::detach(const VertexId &r) {
    if (!anchor_ || *anchor_ != r)
        throw ContractError("detach at '" + r + "' does not match the spider anchor");
    anchor_.reset();
}

void SymbolicGraphState::add_block(const std::vector<Edge> &edges) {
    for (const auto &e : edges)
        toggle(e.u, e.v);
}

GraphSpec SymbolicGraphState::to_graph() const {
    GraphSpec g;
    for (const auto &v : vertices_)
        g.add_vertex(v);
    for (auto [a, b] : edges_)
        g.add_edge(vertices_[a], vertices_[b]);
    return g;
}

const char *backend_name(Backend b) { return b == Backend::Vector ? "vector" : "symbolic"; }

VertexId spider_label(const std::vector<VertexId> &vertices) {
    VertexId label = "@spider";
    while (std::find(vertices.begin(), vertices.end(), label) != vertices.end())
        label += "'";
    return label;
}

namespace {

// Orients a block's edges into a vertex chain if they form one.
std::optional<std::vector<VertexId>> as_chain(const std::vector<Edge> &edges) {
    if (edges.empty())
        return std::nullopt;
    for (int flip = 0; flip < 2; flip++) {
        std::vector<VertexId> chain{flip ? edges[0].v : edges[0].u, flip ? edges[0].u : edges[0].v};
        bool ok = true;
        for (std::size_t i = 1; i < edges.size() && ok; i++) {
            if (edges[i].u == chain.back())
                chain.push_back(edges[i].v);
            else if (edges[i].v == chain.back())
                chain.push_back(edges[i].u);
            else
                ok = false;
        }
        if (ok)
            return chain;
    }
    return std::nullopt;
}

class VectorRunner {
   public:
    VectorRunner(const WeaveSchedule &s, const RunOptions &opts, std::uint64_t seed, RunReport &report)
        : opts_(opts), rng_(seed), report_(report), spider_(spider_label(s.vertices)) {
        if (s.vertices.size() + 1 > opts.capacity)
            throw CapacityError("vector backend needs " + std::to_string(s.vertices.size() + 1) +
                                " qubits (vertices + spider) but the capacity is " +
                                std::to_string(opts.capacity) + "; use the symbolic backend");
        state_ = init_register(s.vertices, opts.capacity);
    }

    void run(const std::vector<Step> &steps) {
        for (step_ = 0; step_ < steps.size(); step_++) {
            const auto &st = steps[step_];
            if (const auto *blk = std::get_if<step::PrepareBlock>(&st)) {
                prepare_block(blk->edges);
            } else if (const auto *att = std::get_if<step::Attach>(&st)) {
                attach(att->p);
            } else if (const auto *lnk = std::get_if<step::Link>(&st)) {
                link(lnk->p, lnk->r);
            } else {
                detach(std::get<step::Detach>(st).r);
            }
        }
    }

    PureState take_state() { return std::move(state_); }

   private:
    std::optional<std::int64_t> next_forced_n() {
        if (forced_n_used_ < opts_.forced_outcomes.size())
            return opts_.forced_outcomes[forced_n_used_++];
        return std::nullopt;
    }
    std::optional<int> next_forced_bit() {
        if (forced_bit_used_ < opts_.forced_detach_bits.size())
            return opts_.forced_detach_bits[forced_bit_used_++];
        return std::nullopt;
    }
    void record(OutcomeRecord rec) {
        rec.step = step_;
        report_.outcomes.push_back(std::move(rec));
    }

    void attach(const VertexId &p) {
        state_.add_qubit(spider_, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
        record(attach_spider(state_, p, spider_, opts_.entangler, rng_, next_forced_n()));
        touched_.insert(p);
    }
    void link(const VertexId &p, const VertexId &r) {
        record(link_step(state_, p, r, spider_, opts_.entangler, rng_, next_forced_n()));
        touched_.insert(r);
    }
    void detach(const VertexId &r) { record(detach_spider(state_, spider_, r, rng_, next_forced_bit())); }

    void prepare_block(const std::vector<Edge> &edges) {
        if (edges.size() == 1) {
            // Ancilla-free Bell pair: the fresh endpoint plays the spider.
            const auto &[u, v] = edges[0];
            const bool u_fresh = !touched_.contains(u);
            const bool v_fresh = !touched_.contains(v);
            if (u_fresh || v_fresh) {
                const VertexId &anchor = v_fresh ? u : v;
                const VertexId &fresh = v_fresh ? v : u;
                auto rec = attach_spider(state_, anchor, fresh, opts_.entangler, rng_, next_forced_n());
                rec.op = "prepare_block";
                record(std::move(rec));
                touched_.insert(u);
                touched_.insert(v);
                return;
            }
        }
        if (auto chain = as_chain(edges)) {
            cascade(*chain);
        } else {
            for (const auto &e : edges)
                cascade({e.u, e.v});
        }
    }

    void cascade(const std::vector<VertexId> &chain) {
        attach(chain.front());
        for (std::size_t i = 0; i + 1 < chain.size(); i++)
            link(chain[i], chain[i + 1]);
        detach(chain.back());
    }

    const RunOptions &opts_;
    std::mt19937_64 rng_;
    RunReport &report_;
    VertexId spider_;
    PureState state_;
    std::set<VertexId> touched_;
    std::size_t step_ = 0;
    std::size_t forced_n_used_ = 0;
    std::size_t forced_bit_used_ = 0;
};

}  // namespace

RunReport run_schedule(const WeaveSchedule &s, Backend backend, std::uint64_t seed, const RunOptions &opts) {
    const auto start = std::chrono::steady_clock::now();
    GraphSpec target;
    try {
        target = implied_graph(s);
    } catch (const GraphError &e) {
        throw ScheduleError(std::string("invalid schedule: ") + e.what());
    }
    auto violations = validate_schedule(s, target);
    if (!violations.empty())
        throw ScheduleError("invalid schedule: " + violations.front().message);

    RunReport report;
    report.backend = backend;
    report.seed = seed;
    report.num_vertices = target.num_vertices();
    report.num_target_edges = target.num_edges();

    if (backend == Backend::Vector) {
        VectorRunner runner(s, opts, seed, report);
        runner.run(s.steps);
        report.state = runner.take_state();
        report.fidelity = fidelity(*report.state, target);
    } else {
        SymbolicGraphState sym(s.vertices);
        for (const auto &st : s.steps) {
            if (const auto *blk = std::get_if<step::PrepareBlock>(&st))
                sym.add_block(blk->edges);
            else if (const auto *att = std::get_if<step::Attach>(&st))
                sym.attach(att->p);
            else if (const auto *lnk = std::get_if<step::Link>(&st))
                sym.link(lnk->p, lnk->r);
            else
                sym.detach(std::get<step::Detach>(st).r);
        }
        report.edges_match = sym.to_graph().canonical_edges() == target.canonical_edges();
        report.symbolic = std::move(sym);
    }
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string run_report_to_json(const RunReport &r, bool include_timing) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["backend"] = backend_name(r.backend);
    doc["seed"] = r.seed;
    doc["vertices"] = r.num_vertices;
    doc["target_edges"] = r.num_target_edges;
    if (r.fidelity)
        doc["fidelity"] = *r.fidelity;
    if (r.edges_match)
        doc["edges_match"] = *r.edges_match;
    if (r.symbolic)
        doc["final_edges"] = r.symbolic->num_edges();
    json outcomes = json::array();
    for (const auto &o : r.outcomes) {
        json j;
        j["step"] = o.step;
        j["op"] = o.op;
        if (o.bit) {
            j["bit"] = *o.bit;
        } else {
            j["n"] = o.n;
            if (o.n_read != o.n)
                j["n_read"] = o.n_read;
        }
        json corr = json::array();
        for (const auto &c : o.corrections)
            corr.push_back({std::string(1, static_cast<char>(c.pauli)), c.qubit});
        j["corrections"] = std::move(corr);
        outcomes.push_back(std::move(j));
    }
    doc["outcomes"] = std::move(outcomes);
    if (include_timing)
        doc["wall_time_s"] = r.wall_time_s;
    return doc.dump(2) + "\n";
}

}  // namespace gw
