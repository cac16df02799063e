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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gw {

double QubusParams::beta() const { return std::numbers::sqrt2 * alpha * std::sin(theta); }

QubusParams QubusParams::from_products(double alpha_sin_theta, double gamma_theta, double theta, double eta) {
    QubusParams p;
    p.theta = theta;
    p.alpha = alpha_sin_theta / std::sin(theta);
    p.gamma = gamma_theta / theta;
    p.eta = eta;
    p.validate();
    return p;
}

void QubusParams::validate() const {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("alpha must be finite and >= 0, got " + std::to_string(alpha));
    if (!(theta > 0.0 && theta < std::numbers::pi / 2))
        throw std::invalid_argument("theta must lie in (0, pi/2), got " + std::to_string(theta));
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("gamma must be finite and >= 0, got " + std::to_string(gamma));
    if (!(eta >= 0.0 && eta <= 1.0))
        throw std::invalid_argument("eta must lie in [0, 1], got " + std::to_string(eta));
}

cplx xpm_shift(cplx amp, double theta) { return amp * std::polar(1.0, theta); }

std::pair<cplx, cplx> bs_50_50(cplx a1, cplx a2) {
    const double s = (1.0 / std::numbers::sqrt2);
    return {(a1 - a2) * s, (a1 + a2) * s};
}

double poisson_pmf(double mean_photons, std::int64_t n) {
    if (n < 0)
        return 0.0;
    if (mean_photons == 0.0)
        return n == 0 ? 1.0 : 0.0;
    const double nd = static_cast<double>(n);
    return std::exp(-mean_photons + nd * std::log(mean_photons) - std::lgamma(nd + 1.0));
}

cplx coherent_overlap(cplx z, std::int64_t n) {
    const double mag = std::abs(z);
    if (mag == 0.0)
        return n == 0 ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
    const double nd = static_cast<double>(n);
    const double log_mag = -0.5 * mag * mag + nd * std::log(mag) - 0.5 * std::lgamma(nd + 1.0);
    return std::polar(std::exp(log_mag), nd * std::arg(z));
}

double no_click_prob(double zeta_sq, double eta) { return std::exp(-eta * zeta_sq); }

double qnd_error_formula(const QubusParams &p) {
    const double s = std::sin(p.theta);
    const double x = -std::expm1(-0.5 * p.eta * p.gamma * p.gamma * p.theta * p.theta);
    return std::exp(-2.0 * x * p.alpha * p.alpha * s * s);
}

double probe_intensity(const QubusParams &p, std::int64_t n, ProbeModel model) {
    const double nd = static_cast<double>(n);
    if (model == ProbeModel::Linearized)
        return nd * p.gamma * p.gamma * p.theta * p.theta / 2.0;
    // 1 - cos(x) = 2 sin^2(x/2) keeps precision for small x.
    const double h = std::sin(0.5 * nd * p.theta);
    return 2.0 * p.gamma * p.gamma * h * h;
}

double qnd_error_sum(const QubusParams &p, ProbeModel model) {
    return qnd_error_sum(p, model, kPoissonTailCutoff);
}

double qnd_error_sum(const QubusParams &p, ProbeModel model, double tail_cutoff) {
    const double mu = p.beta() * p.beta();
    double total = 0.0;
    for (std::int64_t n = 0;; n++) {
        total += poisson_pmf(mu, n) * no_click_prob(probe_intensity(p, n, model), p.eta);
        // For n + 2 > mu the tail past n is bounded by a geometric series
        // with ratio mu / (n + 2).
        const double next = poisson_pmf(mu, n + 1);
        const double ratio = mu / static_cast<double>(n + 2);
        if (ratio < 1.0 && next / (1.0 - ratio) < tail_cutoff)
            break;
    }
    return total;
}

QndReading sample_qnd(std::int64_t n_true, const QubusParams &p, std::mt19937_64 &rng) {
    if (n_true <= 0)
        return {};
    const double dark = no_click_prob(probe_intensity(p, n_true, ProbeModel::Cosine), p.eta);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    if (u(rng) < dark)
        return {};
    return {true, n_true};
}

}  // namespace gw
