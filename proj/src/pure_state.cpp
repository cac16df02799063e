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

#include "graphweaver/pure_state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_set>

#include "graphweaver/errors.hpp"

namespace gw {

PureState PureState::from_amplitudes(std::vector<VertexId> labels, std::vector<cplx> amplitudes,
                                     std::size_t capacity) {
    if (labels.size() > capacity)
        throw CapacityError(std::to_string(labels.size()) + " qubits exceed the capacity of " + std::to_string(capacity));
    if (amplitudes.size() != (std::size_t{1} << labels.size()))
        throw std::invalid_argument("amplitude vector length must be 2^" + std::to_string(labels.size()));
    std::unordered_set<VertexId> seen;
    for (const auto &l : labels)
        if (!seen.insert(l).second)
            throw std::invalid_argument("duplicate qubit label '" + l + "'");
    PureState s;
    s.capacity_ = capacity;
    s.labels_ = std::move(labels);
    s.amps_ = std::move(amplitudes);
    if (s.norm() == 0.0)
        throw std::invalid_argument("zero amplitude vector");
    s.normalize();
    return s;
}

bool PureState::has_qubit(std::string_view label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t PureState::bit_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw std::out_of_range("no qubit labelled '" + std::string(label) + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

void PureState::add_qubit(const VertexId &label, cplx c0, cplx c1) {
    if (has_qubit(label))
        throw std::invalid_argument("qubit '" + label + "' already exists");
    if (labels_.size() + 1 > capacity_)
        throw CapacityError("register would hold " + std::to_string(labels_.size() + 1) +
                            " qubits, above the capacity of " + std::to_string(capacity_));
    const std::size_t half = amps_.size();
    amps_.resize(2 * half);
    for (std::size_t i = 0; i < half; i++) {
        amps_[half + i] = amps_[i] * c1;
        amps_[i] *= c0;
    }
    labels_.push_back(label);
}

double PureState::prob_one(std::string_view label) const {
    const std::size_t mask = std::size_t{1} << bit_of(label);
    double p = 0.0;
    for (std::size_t i = 0; i < amps_.size(); i++)
        if (i & mask)
            p += std::norm(amps_[i]);
    return p;
}

double PureState::project_out(std::string_view label, int bit) {
    const std::size_t k = bit_of(label);
    const std::size_t low = (std::size_t{1} << k) - 1;
    const std::size_t keep = bit ? (std::size_t{1} << k) : 0;
    std::vector<cplx> out(amps_.size() / 2);
    double p = 0.0;
    for (std::size_t j = 0; j < out.size(); j++) {
        std::size_t i = ((j & ~low) << 1) | keep | (j & low);
        out[j] = amps_[i];
        p += std::norm(out[j]);
    }
    amps_ = std::move(out);
    labels_.erase(labels_.begin() + static_cast<std::ptrdiff_t>(k));
    if (p > 0.0)
        normalize();
    return p;
}

double PureState::norm() const {
    double s = 0.0;
    for (const auto &a : amps_)
        s += std::norm(a);
    return std::sqrt(s);
}

void PureState::normalize() {
    const double n = norm();
    if (n == 0.0)
        throw ContractError("cannot normalize the zero vector");
    for (auto &a : amps_)
        a /= n;
}

PureState init_register(const std::vector<VertexId> &labels, std::size_t capacity) {
    if (labels.empty())
        throw std::invalid_argument("register needs at least one qubit");
    std::unordered_set<VertexId> seen;
    for (const auto &l : labels)
        if (!seen.insert(l).second)
            throw std::invalid_argument("duplicate qubit label '" + l + "'");
    if (labels.size() > capacity)
        throw CapacityError(std::to_string(labels.size()) + " qubits exceed the state-vector capacity of " +
                            std::to_string(capacity) + " qubits");
    PureState s;
    s.capacity_ = capacity;
    s.labels_ = labels;
    const std::size_t dim = std::size_t{1} << labels.size();
    s.amps_.assign(dim, cplx{std::pow(2.0, -0.5 * static_cast<double>(labels.size())), 0.0});
    return s;
}

void apply_h(PureState &s, std::string_view q) {
    const std::size_t mask = std::size_t{1} << s.bit_of(q);
    auto amps = s.amplitudes();
    const double r = (1.0 / std::numbers::sqrt2);
    for (std::size_t i = 0; i < amps.size(); i++) {
        if (i & mask)
            continue;
        const cplx a = amps[i];
        const cplx b = amps[i | mask];
        amps[i] = (a + b) * r;
        amps[i | mask] = (a - b) * r;
    }
}

void apply_x(PureState &s, std::string_view q) {
    const std::size_t mask = std::size_t{1} << s.bit_of(q);
    auto amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++)
        if (!(i & mask))
            std::swap(amps[i], amps[i | mask]);
}

void apply_z(PureState &s, std::string_view q) {
    const std::size_t mask = std::size_t{1} << s.bit_of(q);
    auto amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++)
        if (i & mask)
            amps[i] = -amps[i];
}

void apply_cz(PureState &s, std::string_view q1, std::string_view q2) {
    if (q1 == q2)
        throw std::invalid_argument("CZ needs two distinct qubits, got '" + std::string(q1) + "' twice");
    const std::size_t mask = (std::size_t{1} << s.bit_of(q1)) | (std::size_t{1} << s.bit_of(q2));
    auto amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++)
        if ((i & mask) == mask)
            amps[i] = -amps[i];
}

namespace {

// perm[i] = bit position in `b` of a's qubit i.
std::vector<std::size_t> label_permutation(const PureState &a, const PureState &b) {
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("states have different qubit counts");
    std::vector<std::size_t> perm(a.num_qubits());
    for (std::size_t i = 0; i < a.num_qubits(); i++) {
        if (!b.has_qubit(a.labels()[i]))
            throw std::invalid_argument("qubit '" + a.labels()[i] + "' is missing from the other state");
        perm[i] = b.bit_of(a.labels()[i]);
    }
    return perm;
}

std::size_t permute_index(std::size_t x, const std::vector<std::size_t> &perm) {
    std::size_t y = 0;
    for (std::size_t i = 0; i < perm.size(); i++)
        if (x >> i & 1)
            y |= std::size_t{1} << perm[i];
    return y;
}

}  // namespace

cplx inner_product(const PureState &a, const PureState &b) {
    auto perm = label_permutation(a, b);
    bool identity = true;
    for (std::size_t i = 0; i < perm.size(); i++)
        identity = identity && perm[i] == i;
    auto aa = a.amplitudes();
    auto bb = b.amplitudes();
    cplx acc{0.0, 0.0};
    for (std::size_t x = 0; x < aa.size(); x++)
        acc += std::conj(aa[x]) * bb[identity ? x : permute_index(x, perm)];
    return acc;
}

double overlap(const PureState &a, const PureState &b) { return std::abs(inner_product(a, b)); }

double fidelity(const PureState &state, const GraphSpec &g) {
    if (state.num_qubits() != g.num_vertices())
        throw std::invalid_argument("state has " + std::to_string(state.num_qubits()) + " qubits but the graph has " +
                                    std::to_string(g.num_vertices()) + " vertices");
    for (const auto &v : g.vertices())
        if (!state.has_qubit(v))
            throw std::invalid_argument("graph vertex '" + v + "' has no qubit in the state");
    std::vector<std::size_t> masks;
    masks.reserve(g.num_edges());
    for (const auto &e : g.edges())
        masks.push_back((std::size_t{1} << state.bit_of(e.u)) | (std::size_t{1} << state.bit_of(e.v)));
    auto amps = state.amplitudes();
    cplx acc{0.0, 0.0};
    for (std::size_t x = 0; x < amps.size(); x++) {
        std::size_t parity = 0;
        for (std::size_t m : masks)
            parity ^= (x & m) == m;
        acc += parity ? -amps[x] : amps[x];
    }
    const double scale = std::pow(2.0, -0.5 * static_cast<double>(state.num_qubits()));
    return std::norm(acc * scale);
}

}  // namespace gw
