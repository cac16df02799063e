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

#include "graphweaver/entangler.hpp"

#include <array>
#include <cmath>

#include "graphweaver/errors.hpp"

namespace gw {

std::vector<Correction> link_corrections(std::int64_t n, const VertexId &p, const VertexId &a) {
    if (n == 0)
        return {};
    std::vector<Correction> out{{Pauli::Z, p}, {Pauli::X, a}};
    if (n % 2 == 1)
        out.push_back({Pauli::Z, a});
    return out;
}

std::vector<Correction> attach_corrections(std::int64_t n, const VertexId &a) {
    if (n == 0)
        return {};
    std::vector<Correction> out{{Pauli::X, a}};
    if (n % 2 == 1)
        out.push_back({Pauli::Z, a});
    return out;
}

namespace {

// Difference-port amplitude for target bit t and spider bit s. Beam 1 picks
// up theta from |1>_t and |0>_s, beam 2 from |0>_t and |1>_s; both are then
// shifted by -theta and mixed.
cplx difference_port(int t, int s, const QubusParams &p) {
    const cplx a{p.alpha, 0.0};
    const double phase1 = p.theta * ((t == 1) + (s == 0)) - p.theta;
    const double phase2 = p.theta * ((t == 0) + (s == 1)) - p.theta;
    return bs_50_50(xpm_shift(a, phase1), xpm_shift(a, phase2)).first;
}

void apply(PureState &s, const Correction &c) {
    if (c.pauli == Pauli::X)
        apply_x(s, c.qubit);
    else
        apply_z(s, c.qubit);
}

std::int64_t read_out(std::int64_t n, const EntanglerOptions &opts, std::mt19937_64 &rng) {
    if (!opts.qnd_errors)
        return n;
    return sample_qnd(n, opts.qubus, rng).n;
}

}  // namespace

void qubus_project(PureState &s, std::string_view target, std::string_view spider, std::int64_t n,
                   const QubusParams &params) {
    if (n < 0)
        throw std::invalid_argument("photon number must be >= 0");
    const std::size_t tb = s.bit_of(target);
    const std::size_t sb = s.bit_of(spider);
    if (tb == sb)
        throw std::invalid_argument("target and spider must be distinct qubits");
    std::array<cplx, 4> factor;
    for (int t = 0; t < 2; t++)
        for (int a = 0; a < 2; a++)
            factor[2 * t + a] = coherent_overlap(difference_port(t, a, params), n);
    auto amps = s.amplitudes();
    double total = 0.0;
    for (std::size_t i = 0; i < amps.size(); i++) {
        int t = static_cast<int>(i >> tb & 1);
        int a = static_cast<int>(i >> sb & 1);
        amps[i] *= factor[2 * t + a];
        total += std::norm(amps[i]);
    }
    if (!(total > 0.0) || !std::isfinite(total))
        throw ContractError("photon number " + std::to_string(n) + " has zero probability for this input");
    const double scale = 1.0 / std::sqrt(total);
    for (auto &x : amps)
        x *= scale;
}

std::int64_t sample_photon_number(const PureState &s, std::string_view target, std::string_view spider,
                                  const QubusParams &params, std::mt19937_64 &rng) {
    const std::size_t tb = s.bit_of(target);
    const std::size_t sb = s.bit_of(spider);
    auto amps = s.amplitudes();
    double even = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < amps.size(); i++) {
        double w = std::norm(amps[i]);
        total += w;
        if ((i >> tb & 1) == (i >> sb & 1))
            even += w;
    }
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double mu = params.beta() * params.beta();
    if (u(rng) * total < even || mu <= 0.0)
        return 0;
    std::poisson_distribution<std::int64_t> poisson(mu);
    for (;;) {
        std::int64_t n = poisson(rng);
        if (n >= 1)
            return n;
    }
}

bool is_fresh_plus(const PureState &s, std::string_view spider, double tol) {
    const std::size_t mask = std::size_t{1} << s.bit_of(spider);
    auto amps = s.amplitudes();
    // Weight of |->_spider.
    double minus = 0.0;
    for (std::size_t i = 0; i < amps.size(); i++)
        if (!(i & mask))
            minus += 0.5 * std::norm(amps[i] - amps[i | mask]);
    return minus <= tol;
}

bool is_anchored(const PureState &s, std::string_view p, std::string_view spider, double tol) {
    PureState copy = s;
    apply_cz(copy, p, spider);
    return is_fresh_plus(copy, spider, tol);
}

OutcomeRecord attach_spider(PureState &s, const VertexId &p, const VertexId &a, const EntanglerOptions &opts,
                            std::mt19937_64 &rng, std::optional<std::int64_t> forced_n) {
    if (!s.has_qubit(a))
        throw ContractError("spider '" + a + "' is not in the register");
    if (!s.has_qubit(p))
        throw ContractError("qubit '" + p + "' is not in the register");
    if (p == a)
        throw ContractError("cannot attach a spider to itself");
    if (!is_fresh_plus(s, a))
        throw ContractError("spider '" + a + "' must be an unentangled |+>");

    OutcomeRecord rec;
    rec.op = "attach";
    rec.n = forced_n ? *forced_n : sample_photon_number(s, p, a, opts.qubus, rng);
    qubus_project(s, p, a, rec.n, opts.qubus);
    rec.n_read = read_out(rec.n, opts, rng);
    rec.corrections = attach_corrections(rec.n_read, a);
    for (const auto &c : rec.corrections)
        apply(s, c);
    apply_h(s, a);
    return rec;
}

OutcomeRecord link_step(PureState &s, const VertexId &p, const VertexId &r, const VertexId &a,
                        const EntanglerOptions &opts, std::mt19937_64 &rng, std::optional<std::int64_t> forced_n) {
    for (const auto *q : {&p, &r, &a})
        if (!s.has_qubit(*q))
            throw ContractError("qubit '" + *q + "' is not in the register");
    if (p == r || r == a || p == a)
        throw ContractError("link needs three distinct qubits p, r and the spider");
    if (opts.check_preconditions && !is_anchored(s, p, a))
        throw ContractError("spider '" + a + "' is not anchored at '" + p + "'");

    OutcomeRecord rec;
    rec.op = "link";
    rec.n = forced_n ? *forced_n : sample_photon_number(s, r, a, opts.qubus, rng);
    qubus_project(s, r, a, rec.n, opts.qubus);
    rec.n_read = read_out(rec.n, opts, rng);
    rec.corrections = link_corrections(rec.n_read, p, a);
    for (const auto &c : rec.corrections)
        apply(s, c);
    apply_h(s, a);
    return rec;
}

OutcomeRecord detach_spider(PureState &s, const VertexId &a, const VertexId &r_last, std::mt19937_64 &rng,
                            std::optional<int> forced_bit) {
    if (!s.has_qubit(a))
        throw ContractError("spider '" + a + "' is not in the register");
    if (!s.has_qubit(r_last))
        throw ContractError("qubit '" + r_last + "' is not in the register");
    const double p1 = s.prob_one(a);
    int bit;
    if (forced_bit) {
        bit = *forced_bit ? 1 : 0;
        if ((bit ? p1 : 1.0 - p1) < 1e-15)
            throw ContractError("forced spider outcome " + std::to_string(bit) + " has zero probability");
    } else {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        bit = u(rng) < p1 ? 1 : 0;
    }
    s.project_out(a, bit);

    OutcomeRecord rec;
    rec.op = "detach";
    rec.bit = bit;
    if (bit) {
        rec.corrections.push_back({Pauli::Z, r_last});
        apply_z(s, r_last);
    }
    return rec;
}

}  // namespace gw
