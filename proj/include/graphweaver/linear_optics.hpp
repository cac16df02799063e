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

// Probabilistic linear-optics cascade entangler.
//
// A PBS followed by coincidence detection acts as a parity gate: it keeps the
// even-parity part of (photon, spider) and otherwise fails. With a Hadamard
// on the spider after every gate, the first gate anchors the spider at the
// first photon and each later gate is a link step restricted to the n = 0
// branch, so a string of n photons needs n successful gates.

#ifndef GRAPHWEAVER_LINEAR_OPTICS_HPP
#define GRAPHWEAVER_LINEAR_OPTICS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "graphweaver/pure_state.hpp"

namespace gw {

struct LinearTrialConfig {
    std::size_t string_length = 3;  // photons in the string, >= 2
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    /// Compute the fidelity of every successful output with the linear cluster state.
    bool check_states = true;
    std::size_t capacity = kDefaultCapacity;
};

struct LinearStringReport {
    std::size_t string_length = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double success_rate = 0.0;
    /// 2^n, the mean number of string attempts per success.
    double expected_attempts = 0.0;
    /// Smallest fidelity over successful outputs; absent with no successes or checks off.
    std::optional<double> min_fidelity_on_success;
};

/// Even-parity weight of (p, a), the success probability of a PBS attempt.
double even_parity_weight(const PureState &s, std::string_view p, std::string_view a);

/// On success projects (p, a) onto even parity and renormalizes; on failure
/// the state is left untouched and the caller discards the attempt.
bool pbs_parity_attempt(PureState &s, std::string_view p, std::string_view a, std::mt19937_64 &rng,
                        std::optional<bool> forced = std::nullopt);

/// One full string attempt on photons "q0".."q{n-1}" and spider "a". Returns
/// the state after the spider is measured out, or nothing if any gate failed.
std::optional<PureState> attempt_string(std::size_t n, std::mt19937_64 &rng, std::size_t capacity = kDefaultCapacity);

/// Throws std::invalid_argument for n < 2 or zero trials, CapacityError when
/// n + 1 qubits exceed the capacity.
LinearStringReport simulate_string(const LinearTrialConfig &cfg);

std::string linear_report_to_json(const LinearStringReport &r);

}  // namespace gw

#endif
