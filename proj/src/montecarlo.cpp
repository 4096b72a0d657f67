// SPDX-License-Identifier: Apache-2.0
//
// lbbsec - secrecy outage analysis for beamformed Rician wiretap channels
// Copyright (C) 2026 lbbsec developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "lbb/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "lbb/outage.hpp"

namespace lbb {

namespace {

constexpr long kTrialChunk = 1 << 16;

void fill_rician(MatC& out, const MatC& los, double k_factor, Rng& rng)
{
    const double los_w = std::sqrt(k_factor / (1.0 + k_factor));
    const double sc_w = std::sqrt(1.0 / (1.0 + k_factor));
    for (Eigen::Index i = 0; i < los.rows(); ++i)
        for (Eigen::Index j = 0; j < los.cols(); ++j)
            out(i, j) = los_w * los(i, j) + sc_w * rng.complex_gaussian();
}

} // namespace

MatC an_precoder(const RowVecC& h_jb)
{
    const Eigen::Index n = h_jb.size();
    if (n < 2) throw std::invalid_argument("an_precoder requires at least two jammer antennas");
    if (h_jb.norm() == 0.0) throw std::invalid_argument("an_precoder requires a nonzero channel");
    Eigen::JacobiSVD<MatC> svd(h_jb, Eigen::ComputeFullV);
    return svd.matrixV().rightCols(n - 1);
}

double sinr_eve_no_jammer(const MatC& g_ae, const VecC& w, double gamma_ae)
{
    return gamma_ae * (g_ae * w).squaredNorm();
}

double sinr_eve_jammer(const MatC& g_ae, const MatC& g_je, const MatC& w_an, const VecC& w,
                       double gamma_ae, double gamma_je, int n_jammer)
{
    if (gamma_je == 0.0) return sinr_eve_no_jammer(g_ae, w, gamma_ae); // M reduces to I
    const double kappa = gamma_je / (n_jammer - 1);
    const MatC z = g_je * w_an;
    MatC m = kappa * (z * z.adjoint());
    m.diagonal().array() += 1.0;
    const VecC v = g_ae * w;
    const VecC x = Eigen::LLT<MatC>(m).solve(v);
    return gamma_ae * v.dot(x).real();
}

double sinr_eve_jammer_eigenroute(const MatC& g_ae, const MatC& g_je, const MatC& w_an,
                                  const VecC& w, double gamma_ae, double gamma_je, int n_jammer)
{
    const double kappa = gamma_je / (n_jammer - 1);
    const MatC z = g_je * w_an;
    const MatC r = kappa * (z * z.adjoint());
    Eigen::SelfAdjointEigenSolver<MatC> es(r);
    const VecC mu = es.eigenvectors().adjoint() * (g_ae * w);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < mu.size(); ++i)
        sum += std::norm(mu(i)) / (es.eigenvalues()(i) + 1.0);
    return gamma_ae * sum;
}

McScenario make_scenario(const ChannelParams& params, const SystemGeometry& geometry,
                         const LinkBudget& budget, std::uint64_t seed, double phi_ae_override)
{
    const bool jammer = geometry.has_jammer() && params.n_jammer >= 2;
    params.validate(jammer);

    McScenario s;
    s.params = params;
    s.budget = budget;

    const double phi_ae = std::isfinite(phi_ae_override) ? phi_ae_override : geometry.phi_ae();
    s.g_ae_row = los_vector(params.n_alice, params.spacing_alice, geometry.eve().angle);
    s.g_ae_o = los_matrix_to_eve(params.n_alice, params.n_eve, params.spacing_alice,
                                 params.spacing_eve, geometry.eve().angle, phi_ae);

    Rng rng(seed);
    Rng main_rng = rng.substream(Stream::main_channel);
    s.h_ab = sample_rician_vector(
        los_vector(params.n_alice, params.spacing_alice, geometry.bob().angle), params.k_ab,
        main_rng);

    if (jammer) {
        s.g_je_o = los_matrix_to_eve(params.n_jammer, params.n_eve, params.spacing_jammer,
                                     params.spacing_eve, geometry.theta_je(), geometry.phi_je());
        Rng jam_rng = rng.substream(Stream::jammer_channel);
        s.h_jb = sample_rician_vector(
            los_vector(params.n_jammer, params.spacing_jammer, geometry.theta_jb()),
            params.k_jb, jam_rng);
        s.w_an = an_precoder(s.h_jb);
    }
    return s;
}

double bob_sinr(const McScenario& scenario, const VecC& w)
{
    return scenario.budget.gamma_ab * std::norm((scenario.h_ab * w)(0));
}

OutageEstimate empirical_outage(const McScenario& scenario, const VecC& w, double r_s,
                                long n_trials, bool jammer_on, const Rng& rng)
{
    if (n_trials < 1) throw std::invalid_argument("empirical_outage requires n_trials >= 1");
    if (jammer_on && scenario.w_an.size() == 0)
        throw std::invalid_argument("scenario has no jammer conditioning");

    const ChannelParams& p = scenario.params;
    const double threshold = secrecy_threshold(r_s, bob_sinr(scenario, w));
    const bool jam_active = jammer_on && scenario.budget.gamma_je > 0.0;
    const double kappa = jam_active ? scenario.budget.gamma_je / (p.n_jammer - 1) : 0.0;

    MatC g_ae(p.n_eve, p.n_alice);
    MatC g_je, z, m;
    Eigen::LLT<MatC> llt;
    if (jam_active) {
        g_je.resize(p.n_eve, p.n_jammer);
        z.resize(p.n_eve, p.n_jammer - 1);
        m.resize(p.n_eve, p.n_eve);
    }
    VecC v(p.n_eve), x(p.n_eve);

    long outages = 0;
    for (long start = 0; start < n_trials; start += kTrialChunk) {
        const long count = std::min<long>(kTrialChunk, n_trials - start);
        const std::uint64_t chunk = static_cast<std::uint64_t>(start / kTrialChunk);
        Rng ae_rng = rng.substream(Stream::eve_scatter, chunk);
        Rng je_rng = rng.substream(Stream::jam_scatter, chunk);
        for (long t = 0; t < count; ++t) {
            fill_rician(g_ae, scenario.g_ae_o, p.k_ae, ae_rng);
            double gamma_e;
            if (jam_active) {
                fill_rician(g_je, scenario.g_je_o, p.k_je, je_rng);
                z.noalias() = g_je * scenario.w_an;
                m.noalias() = kappa * (z * z.adjoint());
                m.diagonal().array() += 1.0;
                v.noalias() = g_ae * w;
                llt.compute(m);
                x = llt.solve(v);
                gamma_e = scenario.budget.gamma_ae * v.dot(x).real();
            } else {
                v.noalias() = g_ae * w;
                gamma_e = scenario.budget.gamma_ae * v.squaredNorm();
            }
            if (gamma_e > threshold) ++outages;
        }
    }

    OutageEstimate est;
    est.n_trials = n_trials;
    est.p_hat = static_cast<double>(outages) / static_cast<double>(n_trials);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(n_trials));
    return est;
}

SharedTrialSet draw_shared_trials(const McScenario& scenario, long n_trials, const Rng& rng)
{
    if (n_trials < 1) throw std::invalid_argument("draw_shared_trials requires n_trials >= 1");
    const ChannelParams& p = scenario.params;
    SharedTrialSet set;
    set.gamma_ae = scenario.budget.gamma_ae;
    set.quad_forms.reserve(n_trials);
    MatC g(p.n_eve, p.n_alice);
    for (long start = 0; start < n_trials; start += kTrialChunk) {
        const long count = std::min<long>(kTrialChunk, n_trials - start);
        Rng ae_rng = rng.substream(Stream::exhaustive,
                                   static_cast<std::uint64_t>(start / kTrialChunk));
        for (long t = 0; t < count; ++t) {
            fill_rician(g, scenario.g_ae_o, p.k_ae, ae_rng);
            set.quad_forms.emplace_back(g.adjoint() * g);
        }
    }
    return set;
}

double empirical_outage_on(const SharedTrialSet& trials, const McScenario& scenario,
                           const VecC& w, double r_s)
{
    const double threshold = secrecy_threshold(r_s, bob_sinr(scenario, w));
    if (threshold <= 0.0) return 1.0;
    const double cut = threshold / trials.gamma_ae;
    long outages = 0;
    for (const MatC& a : trials.quad_forms) {
        const double q = w.dot(a * w).real();
        if (q > cut) ++outages;
    }
    return static_cast<double>(outages) / static_cast<double>(trials.quad_forms.size());
}

ExhaustiveResult exhaustive_search(const McScenario& scenario, double r_s, int grid_resolution,
                                   long n_trials, const Rng& rng)
{
    if (scenario.params.n_alice != 2)
        throw std::invalid_argument("exhaustive_search is only defined for n_alice = 2");
    if (grid_resolution < 2) throw std::invalid_argument("grid_resolution must be >= 2");

    const SharedTrialSet trials = draw_shared_trials(scenario, n_trials, rng);

    // flatten the 2x2 Hermitian quadratic forms for the hot loop
    const std::size_t n = trials.quad_forms.size();
    std::vector<double> a11(n), a22(n), re12(n), im12(n);
    for (std::size_t t = 0; t < n; ++t) {
        const MatC& a = trials.quad_forms[t];
        a11[t] = a(0, 0).real();
        a22[t] = a(1, 1).real();
        re12[t] = a(0, 1).real();
        im12[t] = a(0, 1).imag();
    }

    const std::complex<double> h0 = scenario.h_ab(0);
    const std::complex<double> h1 = scenario.h_ab(1);

    ExhaustiveResult best;
    best.p_best = 2.0;
    for (int i = 0; i < grid_resolution; ++i) {
        const double split = 0.5 * M_PI * i / (grid_resolution - 1);
        const double c = std::cos(split);
        const double s = std::sin(split);
        for (int k = 0; k < grid_resolution; ++k) {
            const double phase = 2.0 * M_PI * k / grid_resolution;
            const std::complex<double> w1 = std::polar(s, phase);
            const std::complex<double> hw = h0 * c + h1 * w1;
            const double gamma_b = scenario.budget.gamma_ab * std::norm(hw);
            const double threshold = secrecy_threshold(r_s, gamma_b);
            double p;
            if (threshold <= 0.0) {
                p = 1.0;
            } else {
                const double cut = threshold / trials.gamma_ae;
                const double cs2 = 2.0 * c * s;
                const double cosp = std::cos(phase);
                const double sinp = std::sin(phase);
                long outages = 0;
                for (std::size_t t = 0; t < n; ++t) {
                    const double q = c * c * a11[t] + s * s * a22[t] +
                                     cs2 * (re12[t] * cosp - im12[t] * sinp);
                    if (q > cut) ++outages;
                }
                p = static_cast<double>(outages) / static_cast<double>(n);
            }
            if (p < best.p_best) {
                best.p_best = p;
                best.w_best = VecC(2);
                best.w_best << std::complex<double>(c, 0.0), w1;
            }
        }
    }
    return best;
}

} // namespace lbb
