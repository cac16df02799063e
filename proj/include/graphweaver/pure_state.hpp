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

// Amplitude-vector register of labelled polarization qubits, |0> = |H>,
// |1> = |V>. Bit i of an amplitude index is the value of qubit labels()[i].

#ifndef GRAPHWEAVER_PURE_STATE_HPP
#define GRAPHWEAVER_PURE_STATE_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphweaver/graph_model.hpp"

namespace gw {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultCapacity = 22;

class PureState {
   public:
    PureState() = default;

    std::size_t num_qubits() const { return labels_.size(); }
    std::size_t capacity() const { return capacity_; }
    const std::vector<VertexId> &labels() const { return labels_; }
    std::span<const cplx> amplitudes() const { return amps_; }
    std::span<cplx> amplitudes() { return amps_; }

    /// Wraps a raw amplitude vector of length 2^labels.size(). The vector is
    /// normalized; throws std::invalid_argument on a size mismatch or a zero vector.
    static PureState from_amplitudes(std::vector<VertexId> labels, std::vector<cplx> amplitudes,
                                     std::size_t capacity = kDefaultCapacity);

    bool has_qubit(std::string_view label) const;
    /// Bit position of a label; throws std::out_of_range for unknown labels.
    std::size_t bit_of(std::string_view label) const;

    /// Tensors a new qubit c0|0> + c1|1> onto the register as the highest bit.
    /// Throws CapacityError past capacity() and std::invalid_argument on a
    /// duplicate label.
    void add_qubit(const VertexId &label, cplx c0, cplx c1);

    /// Projects a qubit onto |bit>, drops it from the register and renormalizes.
    /// Returns the probability the outcome had before projection.
    double project_out(std::string_view label, int bit);

    /// Probability that measuring `label` gives 1.
    double prob_one(std::string_view label) const;

    double norm() const;
    void normalize();

    friend PureState init_register(const std::vector<VertexId> &labels, std::size_t capacity);

   private:
    std::vector<VertexId> labels_;
    std::vector<cplx> amps_{cplx{1.0, 0.0}};
    std::size_t capacity_ = kDefaultCapacity;
};

/// |+>^m over the given labels. Throws CapacityError if m > capacity and
/// std::invalid_argument on empty or duplicate labels.
PureState init_register(const std::vector<VertexId> &labels, std::size_t capacity = kDefaultCapacity);

void apply_h(PureState &s, std::string_view q);
void apply_x(PureState &s, std::string_view q);
void apply_z(PureState &s, std::string_view q);
/// Throws std::invalid_argument when q1 == q2.
void apply_cz(PureState &s, std::string_view q1, std::string_view q2);

/// <a|b> after matching qubits by label. Throws std::invalid_argument when
/// the label sets differ.
cplx inner_product(const PureState &a, const PureState &b);

/// |<a|b>|, the overlap modulus used for global-phase-blind comparisons.
double overlap(const PureState &a, const PureState &b);

/// |<state| prod_{(i,j) in E} CZ_ij |+>^V>|^2. Throws std::invalid_argument
/// unless the state's labels are exactly g's vertices (in any order).
double fidelity(const PureState &state, const GraphSpec &g);

}  // namespace gw

#endif
