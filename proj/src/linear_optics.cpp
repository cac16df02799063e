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

#include "graphweaver/linear_optics.hpp"

#include <cmath>
#include <stdexcept>

#include "graphweaver/errors.hpp"
#include "json.hpp"

namespace gw {

double even_parity_weight(const PureState &s, std::string_view p, std::string_view a) {
    const std::size_t pb = s.bit_of(p);
    const std::size_t ab = s.bit_of(a);
    auto amps = s.amplitudes();
    double even = 0.0;
    for (std::size_t i = 0; i < amps.size(); i++)
        if ((i >> pb & 1) == (i >> ab & 1))
            even += std::norm(amps[i]);
    return even;
}

bool pbs_parity_attempt(PureState &s, std::string_view p, std::string_view a, std::mt19937_64 &rng,
                        std::optional<bool> forced) {
    const double w = even_parity_weight(s, p, a);
    bool success;
    if (forced) {
        success = *forced;
    } else {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        success = u(rng) < w;
    }
    if (!success)
        return false;
    if (w <= 0.0)
        throw ContractError("forced parity success has zero probability");
    const std::size_t pb = s.bit_of(p);
    const std::size_t ab = s.bit_of(a);
    auto amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++)
        if ((i >> pb & 1) != (i >> ab & 1))
            amps[i] = 0.0;
    s.normalize();
    return true;
}

std::optional<PureState> attempt_string(std::size_t n, std::mt19937_64 &rng, std::size_t capacity) {
    std::vector<VertexId> photons;
    for (std::size_t i = 0; i < n; i++)
        photons.push_back("q" + std::to_string(i));
    auto labels = photons;
    labels.push_back("a");
    PureState s = init_register(labels, capacity);
    for (const auto &q : photons) {
        if (!pbs_parity_attempt(s, q, "a", rng))
            return std::nullopt;
        apply_h(s, "a");
    }
    // Coincidence detection of the spider in Z; outcome 1 is fixed up on the last photon.
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int bit = u(rng) < s.prob_one("a") ? 1 : 0;
    s.project_out("a", bit);
    if (bit)
        apply_z(s, photons.back());
    return s;
}

LinearStringReport simulate_string(const LinearTrialConfig &cfg) {
    if (cfg.string_length < 2)
        throw std::invalid_argument("string length must be >= 2");
    if (cfg.trials == 0)
        throw std::invalid_argument("trials must be >= 1");
    if (cfg.string_length + 1 > cfg.capacity)
        throw CapacityError(std::to_string(cfg.string_length + 1) + " qubits exceed the capacity of " +
                            std::to_string(cfg.capacity));

    GraphSpec path;
    for (std::size_t i = 0; i < cfg.string_length; i++)
        path.add_vertex("q" + std::to_string(i));
    for (std::size_t i = 0; i + 1 < cfg.string_length; i++)
        path.add_edge(path.vertices()[i], path.vertices()[i + 1]);

    LinearStringReport r;
    r.string_length = cfg.string_length;
    r.trials = cfg.trials;
    r.expected_attempts = std::ldexp(1.0, static_cast<int>(cfg.string_length));
    std::mt19937_64 rng(cfg.seed);
    for (std::uint64_t t = 0; t < cfg.trials; t++) {
        auto out = attempt_string(cfg.string_length, rng, cfg.capacity);
        if (!out)
            continue;
        r.successes++;
        if (cfg.check_states) {
            double f = fidelity(*out, path);
            r.min_fidelity_on_success = r.min_fidelity_on_success ? std::min(*r.min_fidelity_on_success, f) : f;
        }
    }
    r.success_rate = static_cast<double>(r.successes) / static_cast<double>(r.trials);
    return r;
}

std::string linear_report_to_json(const LinearStringReport &r) {
    nlohmann::ordered_json doc;
    doc["n"] = r.string_length;
    doc["trials"] = r.trials;
    doc["successes"] = r.successes;
    doc["rate"] = r.success_rate;
    doc["expected_attempts"] = r.expected_attempts;
    if (r.min_fidelity_on_success)
        doc["min_fidelity_on_success"] = *r.min_fidelity_on_success;
    return doc.dump(2) + "\n";
}

}  // namespace gw
