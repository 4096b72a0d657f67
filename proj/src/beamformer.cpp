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

#include "lbb/beamformer.hpp"

#include <cmath>
#include <stdexcept>

#include "lbb/outage.hpp"

namespace lbb {

namespace {

constexpr double kDegenerate = 1e-9;
constexpr std::uint64_t kGridPointStream = 0x747530; // per-grid-point master

} // namespace

BeamBasis build_basis(const RowVecC& h_ab, const RowVecC& g_ae_o)
{
    const double h_norm = h_ab.norm();
    if (h_norm == 0.0) throw std::invalid_argument("build_basis requires a nonzero h_ab");
    const double g_sq = g_ae_o.squaredNorm();
    if (g_sq == 0.0) throw std::invalid_argument("build_basis requires a nonzero g_ae_o");

    // rank-1 projector onto span(g^H)
    const std::complex<double> overlap = (g_ae_o * h_ab.adjoint())(0);
    const VecC span_u = g_ae_o.adjoint() * (overlap / g_sq);
    const VecC null_u = h_ab.adjoint() - span_u;

    BeamBasis basis;
    basis.span_degenerate = span_u.norm() < kDegenerate * h_norm;
    basis.null_degenerate = null_u.norm() < kDegenerate * h_norm;
    basis.w_span = basis.span_degenerate ? VecC::Zero(h_ab.size()) : VecC(span_u / span_u.norm());
    basis.w_null = basis.null_degenerate ? VecC::Zero(h_ab.size()) : VecC(null_u / null_u.norm());
    return basis;
}

Beamformer blend(const BeamBasis& basis, double tau)
{
    if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must lie in [0,1]");
    // degenerate directions collapse the family to the surviving endpoint
    if (basis.null_degenerate) tau = 0.0;
    if (basis.span_degenerate) tau = 1.0;
    Beamformer b;
    b.tau = tau;
    b.w = std::sqrt(tau) * basis.w_null + std::sqrt(1.0 - tau) * basis.w_span;
    return b;
}

std::vector<double> tau_grid(double step)
{
    if (!(step > 0.0 && step <= 1.0)) throw std::invalid_argument("step must lie in (0,1]");
    std::vector<double> grid;
    const double n_real = 1.0 / step;
    const long n = std::lround(n_real);
    if (n >= 1 && std::fabs(n * step - 1.0) < 1e-9) {
        grid.reserve(n + 1);
        for (long i = 0; i <= n; ++i) grid.push_back(static_cast<double>(i) / n);
        return grid;
    }
    for (double t = 0.0; t < 1.0; t += step) grid.push_back(t);
    if (grid.back() < 1.0 - 1e-12) grid.push_back(1.0);
    else grid.back() = 1.0;
    return grid;
}

TauSearchResult search_tau(const BeamBasis& basis,
                           const std::function<double(double)>& gamma_b_of,
                           const std::function<double(double, double)>& outage_of, double step)
{
    TauSearchResult best{0.0, std::numeric_limits<double>::infinity()};
    for (double tau : tau_grid(step)) {
        if (basis.null_degenerate) tau = 0.0;
        if (basis.span_degenerate) tau = 1.0;
        const double gamma_b = gamma_b_of(tau);
        const double p = outage_of(tau, gamma_b);
        if (p <= best.outage_star) { // ties break toward larger tau
            best.outage_star = p;
            best.tau_star = tau;
        }
    }
    return best;
}

OutageEstimate mc_outage_at_grid_point(const McScenario& scenario, const VecC& w, double r_s,
                                       long n_trials, bool jammer_on, const Rng& rng,
                                       std::size_t grid_index)
{
    const Rng point_rng = rng.substream(kGridPointStream, grid_index);
    return empirical_outage(scenario, w, r_s, n_trials, jammer_on, point_rng);
}

TauSearchResult search_tau_jammer(const BeamBasis& basis, const JammerSearchInput& input,
                                  double step)
{
    const McScenario& sc = input.scenario;
    if (sc.params.n_jammer < 2 || sc.w_an.size() == 0)
        throw std::invalid_argument("search_tau_jammer requires a jammer-conditioned scenario");
    if (input.use_gamma_approx && sc.params.k_je != 0.0)
        throw std::invalid_argument("the closed-form path requires k_je = 0");

    TauSearchResult best{0.0, std::numeric_limits<double>::infinity()};
    const std::vector<double> grid = tau_grid(step);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Beamformer bf = blend(basis, grid[i]);
        double p;
        if (input.use_gamma_approx) {
            const JammerMoments m =
                jammer_moments(sc.params.n_eve, sc.params.n_jammer, sc.params.k_ae,
                               sc.params.k_je, sc.g_ae_row, bf.w, sc.budget.gamma_ae,
                               sc.budget.gamma_je);
            p = outage_with_jammer(input.r_s, bob_sinr(sc, bf.w), m);
        } else {
            p = mc_outage_at_grid_point(sc, bf.w, input.r_s, input.n_trials, true, input.rng, i)
                    .p_hat;
        }
        if (p <= best.outage_star) {
            best.outage_star = p;
            best.tau_star = bf.tau;
        }
    }
    return best;
}

} // namespace lbb
