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

// Single-mode coherent-state qubus.
//
// Two qubus beams |alpha> pick up cross-phase shifts theta from the photons,
// are counter-shifted by -theta and mixed on a 50:50 beam splitter. The
// difference port then holds |0> when the two photons agree in the computational
// basis and |+-i*beta> with beta = sqrt(2)*alpha*sin(theta) when they differ.
// Its photon number is read by a QND module: a probe pair |gamma>|gamma>
// is phase-shifted by n*theta and mixed, leaving |zeta_n> with
// |zeta_n|^2 = gamma^2 (1 - cos(n*theta)) on a non-resolving detector of
// efficiency eta.

#ifndef GRAPHWEAVER_QUBUS_MODEL_HPP
#define GRAPHWEAVER_QUBUS_MODEL_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <utility>

namespace gw {

using cplx = std::complex<double>;

struct QubusParams {
    double alpha = 400.0;    // qubus amplitude
    double theta = 0.01;     // XPM phase per photon, in (0, pi/2)
    double gamma = 1000.0;   // QND probe amplitude
    double eta = 1.0;        // detector efficiency

    /// sqrt(2) * alpha * sin(theta), the difference-port amplitude.
    double beta() const;

    /// Parameters from the dimensionless products alpha*sin(theta) and gamma*theta.
    static QubusParams from_products(double alpha_sin_theta, double gamma_theta, double theta, double eta);

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

cplx xpm_shift(cplx amp, double theta);

/// |a1>|a2> -> |(a1 - a2)/sqrt2>|(a1 + a2)/sqrt2>.
std::pair<cplx, cplx> bs_50_50(cplx a1, cplx a2);

/// e^-mu mu^n / n!, evaluated in log space.
double poisson_pmf(double mean_photons, std::int64_t n);

/// <n|z> for a coherent state |z>.
cplx coherent_overlap(cplx z, std::int64_t n);

/// Probability that a non-resolving detector stays dark on a coherent state
/// of intensity zeta_sq: e^{-eta * zeta_sq}.
double no_click_prob(double zeta_sq, double eta);

/// exp{-2 (1 - e^{-eta gamma^2 theta^2 / 2}) alpha^2 sin^2 theta}.
double qnd_error_formula(const QubusParams &p);

enum class ProbeModel {
    Linearized,  // |zeta_n|^2 = n gamma^2 theta^2 / 2
    Cosine,      // |zeta_n|^2 = gamma^2 (1 - cos n theta)
};

double probe_intensity(const QubusParams &p, std::int64_t n, ProbeModel model);

/// Sum over n of poisson_pmf(beta^2, n) * no_click_prob(|zeta_n|^2, eta),
/// truncated once the remaining Poisson tail is below kPoissonTailCutoff.
double qnd_error_sum(const QubusParams &p, ProbeModel model);
double qnd_error_sum(const QubusParams &p, ProbeModel model, double tail_cutoff);

inline constexpr double kPoissonTailCutoff = 1e-15;

struct QndReading {
    bool click = false;
    std::int64_t n = 0;  // photon number registered on a click, 0 otherwise
};

/// Reads a difference-port photon number through the QND module. n_true = 0
/// never clicks; otherwise the detector stays dark with
/// no_click_prob(|zeta_n|^2, eta) (cosine probe model).
QndReading sample_qnd(std::int64_t n_true, const QubusParams &p, std::mt19937_64 &rng);

}  // namespace gw

#endif
