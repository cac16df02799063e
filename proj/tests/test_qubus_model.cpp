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

#include "graphweaver/qubus_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace gw;

namespace {

// Poisson pmf by the plain product e^-mu * prod_{k<=n} mu / k.
double direct_pmf(double mu, int n) {
    double p = std::exp(-mu);
    for (int k = 1; k <= n; k++)
        p *= mu / k;
    return p;
}

}  // namespace

TEST(QubusParams, BetaAndProducts) {
    QubusParams p;
    EXPECT_NEAR(p.beta(), std::sqrt(2.0) * 400.0 * std::sin(0.01), 1e-12);
    auto q = QubusParams::from_products(5.0, 10.0, 0.01, 0.8);
    EXPECT_NEAR(q.alpha * std::sin(q.theta), 5.0, 1e-12);
    EXPECT_NEAR(q.gamma * q.theta, 10.0, 1e-12);
    EXPECT_DOUBLE_EQ(q.eta, 0.8);
}

TEST(QubusParams, ValidateRejectsOutOfRange) {
    QubusParams p;
    p.theta = 0.0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.theta = 2.0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.eta = 1.5;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.alpha = -1.0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.gamma = std::nan("");
    EXPECT_THROW(p.validate(), std::invalid_argument);
    EXPECT_NO_THROW(QubusParams{}.validate());
}

TEST(Optics, XpmAndBeamSplitter) {
    auto z = xpm_shift({2.0, 0.0}, std::numbers::pi / 2);
    EXPECT_NEAR(z.real(), 0.0, 1e-12);
    EXPECT_NEAR(z.imag(), 2.0, 1e-12);
    auto [d, s] = bs_50_50({3.0, 0.0}, {3.0, 0.0});
    EXPECT_NEAR(std::abs(d), 0.0, 1e-12);
    EXPECT_NEAR(s.real(), 3.0 * std::sqrt(2.0), 1e-12);
    // Energy conservation.
    cplx a{1.0, 2.0}, b{-0.5, 0.3};
    auto [o1, o2] = bs_50_50(a, b);
    EXPECT_NEAR(std::norm(o1) + std::norm(o2), std::norm(a) + std::norm(b), 1e-12);
}

TEST(Optics, DifferencePortAmplitudes) {
    // Beam phases after the counter-shift for (target, spider) bits.
    const double alpha = 10.0, theta = 0.1;
    auto port = [&](int t, int s) {
        cplx b1 = xpm_shift(alpha, theta * ((t == 1) + (s == 0)) - theta);
        cplx b2 = xpm_shift(alpha, theta * ((t == 0) + (s == 1)) - theta);
        return bs_50_50(b1, b2).first;
    };
    const double amp = std::sqrt(2.0) * alpha * std::sin(theta);
    EXPECT_NEAR(std::abs(port(0, 0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(port(1, 1)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(port(0, 1) - cplx{0.0, -amp}), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(port(1, 0) - cplx{0.0, amp}), 0.0, 1e-12);
}

TEST(PoissonPmf, Values) {
    EXPECT_NEAR(poisson_pmf(4.0, 4), 0.19536681481316456, 1e-15);
    EXPECT_DOUBLE_EQ(poisson_pmf(0.0, 0), 1.0);
    EXPECT_DOUBLE_EQ(poisson_pmf(0.0, 3), 0.0);
    EXPECT_DOUBLE_EQ(poisson_pmf(2.0, -1), 0.0);
    for (double mu : {0.3, 2.5, 17.0})
        for (int n = 0; n < 30; n++)
            EXPECT_NEAR(poisson_pmf(mu, n), direct_pmf(mu, n), 1e-13 * std::max(1.0, direct_pmf(mu, n)));
}

TEST(PoissonPmf, NormalizedWithMeanMu) {
    for (double mu : {0.1, 1.0, 32.0, 200.0}) {
        double total = 0.0, mean = 0.0;
        for (int n = 0; n < 1000; n++) {
            total += poisson_pmf(mu, n);
            mean += n * poisson_pmf(mu, n);
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
        EXPECT_NEAR(mean, mu, 1e-9 * mu);
    }
}

TEST(CoherentOverlap, ModulusIsPoissonAndPhaseFollowsArgument) {
    cplx z = std::polar(2.0, 0.7);
    for (int n = 0; n < 12; n++) {
        auto c = coherent_overlap(z, n);
        EXPECT_NEAR(std::norm(c), poisson_pmf(4.0, n), 1e-14);
        if (n > 0)
            EXPECT_NEAR(std::remainder(std::arg(c) - 0.7 * n, 2 * std::numbers::pi), 0.0, 1e-12);
    }
    EXPECT_EQ(coherent_overlap({0.0, 0.0}, 0), cplx(1.0, 0.0));
    EXPECT_EQ(coherent_overlap({0.0, 0.0}, 2), cplx(0.0, 0.0));
    // -i beta and +i beta differ by (-1)^n.
    for (int n = 0; n < 6; n++) {
        auto minus = coherent_overlap({0.0, -1.5}, n), plus = coherent_overlap({0.0, 1.5}, n);
        EXPECT_NEAR(std::abs(minus - (n % 2 ? -plus : plus)), 0.0, 1e-14);
    }
}

TEST(NoClick, Values) {
    EXPECT_NEAR(no_click_prob(2.0, 0.5), 0.36787944117144233, 1e-16);
    EXPECT_DOUBLE_EQ(no_click_prob(0.0, 0.3), 1.0);
    EXPECT_DOUBLE_EQ(no_click_prob(5.0, 0.0), 1.0);
}

TEST(QndErrorFormula, ReferenceValue) {
    auto p = QubusParams::from_products(5.0, 10.0, 0.01, 1.0);
    const double x = 1.0 - std::exp(-50.0);
    EXPECT_NEAR(qnd_error_formula(p), std::exp(-50.0 * x), 1e-30);
    EXPECT_NEAR(qnd_error_formula(p) / 1.9287498479639178e-22, 1.0, 1e-12);
}

TEST(QndErrorFormula, MonotoneInEveryResource) {
    auto base = QubusParams::from_products(2.0, 2.0, 0.01, 0.7);
    double e0 = qnd_error_formula(base);
    EXPECT_LT(qnd_error_formula(QubusParams::from_products(2.5, 2.0, 0.01, 0.7)), e0);
    EXPECT_LT(qnd_error_formula(QubusParams::from_products(2.0, 2.5, 0.01, 0.7)), e0);
    EXPECT_LT(qnd_error_formula(QubusParams::from_products(2.0, 2.0, 0.01, 0.9)), e0);
    EXPECT_DOUBLE_EQ(qnd_error_formula(QubusParams::from_products(2.0, 2.0, 0.01, 0.0)), 1.0);
}

TEST(QndErrorSum, LinearizedMatchesGeneratingFunction) {
    // sum_n Pois(mu, n) e^{-c n} = exp(-mu (1 - e^{-c})).
    for (double ast : {0.5, 1.0, 2.0, 4.0, 6.0})
        for (double gt : {0.3, 1.0, 3.0, 10.0})
            for (double eta : {0.2, 1.0}) {
                auto p = QubusParams::from_products(ast, gt, 0.01, eta);
                double mu = 2.0 * ast * ast;
                double c = eta * gt * gt / 2.0;
                double oracle = std::exp(-mu * (1.0 - std::exp(-c)));
                EXPECT_NEAR(qnd_error_sum(p, ProbeModel::Linearized) / oracle, 1.0, 1e-9);
                EXPECT_NEAR(qnd_error_formula(p) / oracle, 1.0, 1e-12);
            }
}

TEST(QndErrorSum, TruncationIsConverged) {
    for (double ast : {1.0, 4.0, 10.0}) {
        auto p = QubusParams::from_products(ast, 2.0, 0.01, 1.0);
        for (auto model : {ProbeModel::Linearized, ProbeModel::Cosine}) {
            double tight = qnd_error_sum(p, model);
            double loose = qnd_error_sum(p, model, 1e-8);
            EXPECT_NEAR(tight, loose, 1e-7 * std::max(tight, 1e-300) + 1e-8);
        }
    }
}

TEST(QndErrorSum, CosineCloseToFormulaWhenVacuumDominates) {
    // With a bright probe every n >= 1 clicks almost surely and the error is
    // the vacuum term e^{-beta^2} in both models.
    for (double ast : {1.0, 2.0, 4.0}) {
        auto p = QubusParams::from_products(ast, 10.0, 0.01, 1.0);
        double f = std::log(qnd_error_formula(p));
        double c = std::log(qnd_error_sum(p, ProbeModel::Cosine));
        EXPECT_LE(std::abs(c - f) / std::abs(f), 0.05);
    }
}

TEST(QndErrorSum, CosineNeverBelowLinearizedForSmallPhases) {
    // For small n theta the cosine probe grows like n^2 rather than n, so it
    // is far brighter from n = 2 on and only marginally dimmer at n = 1.
    for (double ast : {0.5, 1.0, 3.0}) {
        auto p = QubusParams::from_products(ast, 1.0, 0.01, 1.0);
        EXPECT_LE(qnd_error_sum(p, ProbeModel::Cosine), qnd_error_sum(p, ProbeModel::Linearized) * (1 + 1e-12));
    }
}

TEST(ProbeIntensity, Models) {
    auto p = QubusParams::from_products(1.0, 4.0, 0.01, 1.0);
    EXPECT_DOUBLE_EQ(probe_intensity(p, 0, ProbeModel::Cosine), 0.0);
    EXPECT_NEAR(probe_intensity(p, 3, ProbeModel::Linearized), 3 * 16.0 / 2, 1e-9);
    EXPECT_NEAR(probe_intensity(p, 3, ProbeModel::Cosine), p.gamma * p.gamma * (1 - std::cos(0.03)), 1e-9);
    EXPECT_NEAR(probe_intensity(p, 1, ProbeModel::Cosine), probe_intensity(p, 1, ProbeModel::Linearized), 1e-4);
}

TEST(SampleQnd, VacuumNeverClicks) {
    std::mt19937_64 rng(1);
    auto p = QubusParams::from_products(4.0, 0.5, 0.01, 1.0);
    for (int i = 0; i < 1000; i++)
        EXPECT_FALSE(sample_qnd(0, p, rng).click);
}

TEST(SampleQnd, DarkFrequencyMatchesNoClickProbability) {
    std::mt19937_64 rng(77);
    auto p = QubusParams::from_products(4.0, 1.0, 0.01, 0.6);
    for (std::int64_t n : {1, 2, 5}) {
        const int trials = 20000;
        int dark = 0;
        for (int i = 0; i < trials; i++) {
            auto r = sample_qnd(n, p, rng);
            if (!r.click)
                dark++;
            else
                EXPECT_EQ(r.n, n);
        }
        double q = no_click_prob(probe_intensity(p, n, ProbeModel::Cosine), p.eta);
        double sigma = std::sqrt(q * (1 - q) / trials);
        EXPECT_NEAR(static_cast<double>(dark) / trials, q, 4 * sigma + 1e-12) << "n=" << n;
    }
}
