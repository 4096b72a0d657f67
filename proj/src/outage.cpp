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

#include "lbb/outage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lbb/special_fn.hpp"

namespace lbb {

namespace {

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

double binomial(int n, int k)
{
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Generalized binomial coefficient C(a, k) for real a.
double binomial_real(double a, int k)
{
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (a - i) / (i + 1);
    return r;
}

// x^(n_jammer-1) * e^x * sum_t C(n,t) (-x)^(n-t) Gamma(t-n_jammer+2, x),
// equal to x^(n_jammer-1) * integral_0^inf e^-s s^n (s+x)^(1-n_jammer) ds.
// The literal alternating sum cancels catastrophically for large x (weak
// jammer), so beyond x = 100 the integral is expanded binomially instead:
// sum_k C(1-n_jammer, k) (n+k)! / x^k, truncated where the asymptotic
// terms stop shrinking.
double interference_sum(int n, int n_jammer, double x)
{
    if (x < 100.0) {
        double sum = 0.0;
        for (int t = 0; t <= n; ++t) {
            sum += binomial(n, t) * std::pow(-x, n - t) *
                   upper_incomplete_gamma_scaled(t - n_jammer + 2, x);
        }
        return std::pow(x, n_jammer - 1) * sum;
    }
    double sum = 0.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 0; k < 60; ++k) {
        const double term = binomial_real(1 - n_jammer, k) * std::tgamma(double(n + k + 1)) /
                            std::pow(x, k);
        if (std::fabs(term) >= prev) break; // asymptotic tail started growing
        sum += term;
        prev = std::fabs(term);
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}

} // namespace

double secrecy_threshold(double r_s, double gamma_b)
{
    if (r_s < 0.0) throw std::invalid_argument("secrecy rate must be >= 0");
    if (gamma_b < 0.0) throw std::invalid_argument("gamma_b must be >= 0");
    return std::exp2(-r_s) * (1.0 + gamma_b) - 1.0;
}

EveEffectiveStats eve_stats(double k_ae, const RowVecC& g_ae_o, const VecC& w, double gamma_ae)
{
    EveEffectiveStats s;
    const double gain = std::norm((g_ae_o * w)(0));
    s.effective_k = gain * k_ae;
    s.branch_shape = (s.effective_k + 1.0) * (s.effective_k + 1.0) / (2.0 * s.effective_k + 1.0);
    s.branch_mean_snr = (k_ae * gain + 1.0) * gamma_ae / (1.0 + k_ae);
    return s;
}

double outage_no_jammer(double r_s, double gamma_b, const EveEffectiveStats& stats, int n_eve,
                        EveMeanConvention convention)
{
    const double threshold = secrecy_threshold(r_s, gamma_b);
    if (threshold <= 0.0) return 1.0; // Eve beats any negative threshold
    const double shape = n_eve * stats.branch_shape;
    const double rate = convention == EveMeanConvention::per_branch
                            ? stats.branch_shape / stats.branch_mean_snr
                            : shape / stats.branch_mean_snr;
    return clamp01(1.0 - regularized_lower_gamma(shape, threshold * rate));
}

JammerMoments jammer_moments(int n_eve, int n_jammer, double k_ae, double k_je,
                             const RowVecC& g_ae_o, const VecC& w, double gamma_ae,
                             double gamma_je, LosGainConvention convention)
{
    if (k_je != 0.0)
        throw std::invalid_argument("closed-form jammer moments require k_je = 0");
    if (n_jammer < 2) throw std::invalid_argument("jammer moments require n_jammer >= 2");
    if (!(gamma_je > 0.0)) throw std::invalid_argument("jammer moments require gamma_je > 0");
    if (n_eve < 1) throw std::invalid_argument("n_eve must be >= 1");

    JammerMoments m;
    m.kappa = gamma_je / (n_jammer - 1);
    const double x = 1.0 / m.kappa;

    const double row_gain = std::norm((g_ae_o * w)(0));
    const double los_gain =
        convention == LosGainConvention::squared_norm ? n_eve * row_gain : row_gain;

    auto phi = [&](int l) {
        double sum = 0.0;
        for (int mm = 0; mm <= l; ++mm)
            sum += binomial(l, mm) * std::pow(k_ae * los_gain, mm) / pochhammer(n_eve, mm);
        return sum / std::pow(1.0 + k_ae, l);
    };
    m.phi1 = phi(1);
    m.phi2 = phi(2);

    std::vector<double> rho(n_eve);
    for (int p = 0; p < n_eve; ++p) {
        double sum = 0.0;
        double q_factorial = 1.0;
        for (int q = 0; q <= p; ++q) {
            if (q > 0) q_factorial *= q;
            if (q >= std::max(0, p - n_jammer + 1))
                sum += binomial(n_jammer - 1, p - q) / (q_factorial * std::pow(m.kappa, q));
        }
        rho[p] = std::pow(m.kappa, p) * sum;
    }

    auto vtheta = [&](int l) {
        double sum = 0.0;
        for (int p = 0; p < n_eve; ++p) sum += rho[p] * interference_sum(l - 1 + p, n_jammer, x);
        return l * sum;
    };
    m.vtheta1 = vtheta(1);
    m.vtheta2 = vtheta(2);

    m.mean = gamma_ae * m.phi1 * m.vtheta1;
    m.variance = gamma_ae * gamma_ae * (m.phi2 * m.vtheta2 - m.phi1 * m.phi1 * m.vtheta1 * m.vtheta1);
    if (!(m.mean > 0.0) || !(m.variance > 0.0))
        throw std::runtime_error("jammer moment evaluation produced a non-positive mean/variance");
    m.alpha = m.mean * m.mean / m.variance;
    m.beta = m.variance / m.mean;
    return m;
}

double outage_with_jammer(double r_s, double gamma_b, const JammerMoments& moments)
{
    const double threshold = secrecy_threshold(r_s, gamma_b);
    if (threshold <= 0.0) return 1.0;
    return clamp01(1.0 - regularized_lower_gamma(moments.alpha, threshold / moments.beta));
}

} // namespace lbb
