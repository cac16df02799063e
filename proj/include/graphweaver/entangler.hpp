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

// Cascade entangler on an amplitude-vector register.
//
// The spider photon a is "anchored" at p when the register has the form
//
//     sum_x psi_x |x>  (|+>_a if p = 0 in x, |->_a if p = 1)
//   = CZ_{p,a} (|Phi> (x) |+>_a).
//
// One entangler pass couples a target photon t and the spider a to two qubus
// beams, mixes the beams and projects the difference port onto |n>: n = 0
// keeps the t == a components, n > 0 keeps t != a with a relative sign
// (-1)^n. Feed-forward Paulis then bring every outcome to the n = 0 state and
// a Hadamard on the spider finishes the step.
//
//   attach_spider (t = p):   a becomes anchored at p.
//   link_step     (t = r):   CZ_{p,r} is installed and the anchor moves to r.
//   detach_spider:           a is measured in Z; on 1, Z is applied to the anchor.
//
// The i^n phase of the measured branch and the branch dependence of the
// recycled bright port are global within a branch and are dropped.

#ifndef GRAPHWEAVER_ENTANGLER_HPP
#define GRAPHWEAVER_ENTANGLER_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "graphweaver/pure_state.hpp"
#include "graphweaver/qubus_model.hpp"

namespace gw {

enum class Pauli : char { X = 'X', Z = 'Z' };

struct Correction {
    Pauli pauli;
    VertexId qubit;
    bool operator==(const Correction &) const = default;
};

struct OutcomeRecord {
    std::size_t step = 0;
    std::string op;
    /// Difference-port photon number the state was projected on.
    std::int64_t n = 0;
    /// QND reading fed forward; differs from n only when QND errors are modelled.
    std::int64_t n_read = 0;
    /// Spider measurement result, detach only.
    std::optional<int> bit;
    std::vector<Correction> corrections;
};

struct EntanglerOptions {
    QubusParams qubus;
    /// O(2^m) check of the anchored-spider form before every link.
    bool check_preconditions = false;
    /// Pass the sampled n through sample_qnd, so the detector can miss it.
    bool qnd_errors = false;
};

/// Corrections fed forward after a link for reading n:
/// n = 0 none, n even Z(p) X(a), n odd Z(p) X(a) Z(a).
std::vector<Correction> link_corrections(std::int64_t n, const VertexId &p, const VertexId &a);
/// Same for attach: n = 0 none, n even X(a), n odd X(a) Z(a).
std::vector<Correction> attach_corrections(std::int64_t n, const VertexId &a);

/// Applies the qubus coupling and the projection |n><n| on the difference
/// port to (target, spider), then renormalizes. No corrections.
void qubus_project(PureState &s, std::string_view target, std::string_view spider, std::int64_t n,
                   const QubusParams &params);

/// Samples n for an entangler pass: the even branch (target == spider) with
/// its squared weight gives n = 0, otherwise n ~ Poisson(beta^2) given n >= 1.
std::int64_t sample_photon_number(const PureState &s, std::string_view target, std::string_view spider,
                                  const QubusParams &params, std::mt19937_64 &rng);

/// True when `spider` is unentangled and in |+>, i.e. its |-> weight is at
/// most tol. The n = 0 vacuum leak leaves a weight of order e^{-beta^2}.
bool is_fresh_plus(const PureState &s, std::string_view spider, double tol = 1e-10);
/// True when `spider` is anchored at p (see the header comment).
bool is_anchored(const PureState &s, std::string_view p, std::string_view spider, double tol = 1e-10);

/// Anchors the fresh spider a at p. Throws ContractError when a is missing
/// or not an unentangled |+>.
OutcomeRecord attach_spider(PureState &s, const VertexId &p, const VertexId &a, const EntanglerOptions &opts,
                            std::mt19937_64 &rng, std::optional<std::int64_t> forced_n = std::nullopt);

/// Bonds p to r through the spider a anchored at p; afterwards a is anchored
/// at r. r may already be entangled with anything, including p.
OutcomeRecord link_step(PureState &s, const VertexId &p, const VertexId &r, const VertexId &a,
                        const EntanglerOptions &opts, std::mt19937_64 &rng,
                        std::optional<std::int64_t> forced_n = std::nullopt);

/// Measures the spider out and applies Z to r_last on outcome 1. Throws
/// ContractError for a forced bit of zero probability.
OutcomeRecord detach_spider(PureState &s, const VertexId &a, const VertexId &r_last, std::mt19937_64 &rng,
                            std::optional<int> forced_bit = std::nullopt);

}  // namespace gw

#endif
