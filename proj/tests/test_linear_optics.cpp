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

#include <gtest/gtest.h>

#include "graphweaver/errors.hpp"
#include "json.hpp"

using namespace gw;

TEST(ParityGate, EvenWeightOfPlusPair) {
    auto s = init_register({"p", "a"});
    EXPECT_NEAR(even_parity_weight(s, "p", "a"), 0.5, 1e-15);
    std::mt19937_64 rng(1);
    auto t = s;
    EXPECT_FALSE(pbs_parity_attempt(t, "p", "a", rng, false));
    EXPECT_EQ(t.amplitudes()[1], s.amplitudes()[1]);
    EXPECT_TRUE(pbs_parity_attempt(t, "p", "a", rng, true));
    // (|00> + |11>) / sqrt2.
    EXPECT_NEAR(std::abs(t.amplitudes()[0]), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(std::abs(t.amplitudes()[1]), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(t.amplitudes()[3]), 1 / std::sqrt(2.0), 1e-15);
}

TEST(ParityGate, ForcedSuccessOnOddStateThrows) {
    auto s = PureState::from_amplitudes({"p", "a"}, {0.0, 1.0, 0.0, 0.0});
    std::mt19937_64 rng(1);
    EXPECT_THROW(pbs_parity_attempt(s, "p", "a", rng, true), ContractError);
}

TEST(AttemptString, SuccessfulOutputIsLinearCluster) {
    std::mt19937_64 rng(2);
    int successes = 0;
    for (int i = 0; i < 200; i++) {
        auto out = attempt_string(4, rng);
        if (!out)
            continue;
        successes++;
        GraphSpec path;
        for (int q = 0; q < 4; q++)
            path.add_vertex("q" + std::to_string(q));
        for (int q = 0; q + 1 < 4; q++)
            path.add_edge("q" + std::to_string(q), "q" + std::to_string(q + 1));
        EXPECT_GE(fidelity(*out, path), 1 - 1e-12);
    }
    EXPECT_GT(successes, 0);
}

TEST(SimulateString, RateFollowsHalfPerGate) {
    for (std::size_t n : {2u, 3u, 5u}) {
        LinearTrialConfig cfg;
        cfg.string_length = n;
        cfg.trials = 20000;
        cfg.seed = 100 + n;
        auto r = simulate_string(cfg);
        const double p = std::ldexp(1.0, -static_cast<int>(n));
        const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(cfg.trials));
        EXPECT_NEAR(r.success_rate, p, 4 * sigma) << "n=" << n;
        EXPECT_DOUBLE_EQ(r.expected_attempts, 1.0 / p);
        ASSERT_TRUE(r.min_fidelity_on_success.has_value());
        EXPECT_GE(*r.min_fidelity_on_success, 1 - 1e-9);
    }
}

TEST(SimulateString, DeterministicAndValidated) {
    LinearTrialConfig cfg;
    cfg.trials = 500;
    cfg.seed = 5;
    auto a = simulate_string(cfg), b = simulate_string(cfg);
    EXPECT_EQ(a.successes, b.successes);
    EXPECT_EQ(linear_report_to_json(a), linear_report_to_json(b));
    auto doc = nlohmann::json::parse(linear_report_to_json(a));
    EXPECT_EQ(doc["n"], 3);
    EXPECT_EQ(doc["trials"], 500);

    cfg.check_states = false;
    EXPECT_FALSE(simulate_string(cfg).min_fidelity_on_success.has_value());
    cfg.string_length = 1;
    EXPECT_THROW(simulate_string(cfg), std::invalid_argument);
    cfg.string_length = 3;
    cfg.trials = 0;
    EXPECT_THROW(simulate_string(cfg), std::invalid_argument);
    cfg.trials = 1;
    cfg.capacity = 3;
    EXPECT_THROW(simulate_string(cfg), CapacityError);
}
