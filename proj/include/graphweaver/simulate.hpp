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

#ifndef GRAPHWEAVER_SIMULATE_HPP
#define GRAPHWEAVER_SIMULATE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphweaver/entangler.hpp"
#include "graphweaver/weave_planner.hpp"

namespace gw {

/// Edge-set view of a graph state: every schedule step is a CZ product on
/// |+>^V, so the bonds and the spider anchor are all there is to track.
class SymbolicGraphState {
   public:
    explicit SymbolicGraphState(std::vector<VertexId> vertices);

    const std::vector<VertexId> &vertices() const { return vertices_; }
    const std::optional<VertexId> &anchor() const { return anchor_; }
    std::size_t num_edges() const { return edges_.size(); }

    void attach(const VertexId &p);
    /// Toggles (p, r): a second CZ on a bonded pair removes the bond.
    void link(const VertexId &p, const VertexId &r);
    void detach(const VertexId &r);
    void add_block(const std::vector<Edge> &edges);

    /// Current bonds as a graph over the same vertex list.
    GraphSpec to_graph() const;

   private:
    std::size_t index(const VertexId &v) const;
    void toggle(const VertexId &u, const VertexId &v);

    std::vector<VertexId> vertices_;
    std::unordered_map<VertexId, std::size_t> index_;
    std::set<std::pair<std::size_t, std::size_t>> edges_;
    std::optional<VertexId> anchor_;
};

enum class Backend { Vector, Symbolic };

const char *backend_name(Backend b);

struct RunOptions {
    std::size_t capacity = kDefaultCapacity;
    EntanglerOptions entangler;
    /// Photon numbers pinned for the entangler passes in order; later passes sample.
    std::vector<std::int64_t> forced_outcomes;
    /// Spider measurement results pinned for the detaches in order.
    std::vector<int> forced_detach_bits;
};

struct RunReport {
    Backend backend = Backend::Symbolic;
    std::uint64_t seed = 0;
    std::size_t num_vertices = 0;
    std::size_t num_target_edges = 0;
    std::vector<OutcomeRecord> outcomes;
    std::optional<PureState> state;
    std::optional<SymbolicGraphState> symbolic;
    std::optional<double> fidelity;
    /// True when the symbolic backend's edge set equals the target exactly.
    std::optional<bool> edges_match;
    double wall_time_s = 0.0;
};

/// Label for the spider photon, chosen not to collide with any vertex.
VertexId spider_label(const std::vector<VertexId> &vertices);

/// Executes a schedule. The target is implied_graph(s); a schedule whose hash
/// does not match it or that fails validate_schedule throws ScheduleError. The
/// vector backend needs vertices + 1 <= capacity (CapacityError otherwise)
/// and reports the fidelity with the target graph state.
RunReport run_schedule(const WeaveSchedule &s, Backend backend, std::uint64_t seed, const RunOptions &opts = {});

/// RunReport as JSON: backend, seed, sizes, fidelity or edge match, per-step
/// outcomes, and wall_time_s only when include_timing is set (the rest is a
/// pure function of schedule and seed).
std::string run_report_to_json(const RunReport &r, bool include_timing);

}  // namespace gw

#endif
