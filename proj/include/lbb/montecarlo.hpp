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
//
// Simulation oracle. Outage here is always conditioned: the main channel
// h_ab (and h_jb, which only enters through the null-space precoder) is
// drawn once per scenario, while Eve-side scatter is redrawn per trial.

#pragma once

#include <cstdint>
#include <vector>

#include "lbb/channel.hpp"

namespace lbb {

struct OutageEstimate {
    double p_hat = 0.0;
    long n_trials = 0;
    double std_err = 0.0; // sqrt(p (1-p) / n)
};

/// Orthonormal basis of the null space of h_jb, as an n_j x (n_j - 1)
/// matrix. Jamming transmitted through these columns vanishes at Bob.
MatC an_precoder(const RowVecC& h_jb);

/// gamma_ae ||G_ae w||^2.
double sinr_eve_no_jammer(const MatC& g_ae, const VecC& w, double gamma_ae);

/// MMSE-combined SINR at Eve under null-space jamming:
/// gamma_ae w^H G_ae^H M^-1 G_ae w with
/// M = gamma_je/(n_j-1) G_je W_an W_an^H G_je^H + I. M is Hermitian positive
/// definite and is solved by Cholesky factorization, never inverted.
double sinr_eve_jammer(const MatC& g_ae, const MatC& g_je, const MatC& w_an, const VecC& w,
                       double gamma_ae, double gamma_je, int n_jammer);

/// Same quantity through the eigendecomposition of the interference term
/// (sum of |mu_i|^2 / (lambda_i + 1)); independent evaluation path used for
/// cross-checking the factorization route.
double sinr_eve_jammer_eigenroute(const MatC& g_ae, const MatC& g_je, const MatC& w_an,
                                  const VecC& w, double gamma_ae, double gamma_je, int n_jammer);

/// Everything an outage experiment conditions on: parameters, link budget,
/// LOS matrices (these carry the arrival angles at Eve) and the fixed
/// main/jammer-Bob channel realizations.
struct McScenario {
    ChannelParams params;
    LinkBudget budget;
    MatC g_ae_o;      // n_eve x n_alice
    MatC g_je_o;      // n_eve x n_jammer (empty without jammer)
    RowVecC g_ae_row; // transmit-side steering row toward Eve
    RowVecC h_ab;     // conditioned main channel
    RowVecC h_jb;     // conditioned jammer-Bob channel (empty without jammer)
    MatC w_an;        // precoder built from h_jb (empty without jammer)
};

/// Draws the conditioned channels from dedicated substreams of `seed` and
/// assembles the LOS structure. `phi_ae_override`, when finite, replaces
/// the geometric arrival angle at Eve (used to demonstrate that this angle
/// is irrelevant to the outage).
McScenario make_scenario(const ChannelParams& params, const SystemGeometry& geometry,
                         const LinkBudget& budget, std::uint64_t seed,
                         double phi_ae_override = std::numeric_limits<double>::quiet_NaN());

/// Realized SINR at Bob for a beamformer: gamma_ab |h_ab w|^2.
double bob_sinr(const McScenario& scenario, const VecC& w);

/// Empirical outage, conditioned on the scenario's h_ab: the fraction of
/// scatter redraws with gamma_e above the secrecy threshold. Trials are
/// consumed in fixed-size chunks with substreams derived from (rng seed,
/// stream, chunk), so the estimate is bitwise reproducible and independent
/// of evaluation order.
OutageEstimate empirical_outage(const McScenario& scenario, const VecC& w, double r_s,
                                long n_trials, bool jammer_on, const Rng& rng);

/// One shared set of Eve-scatter realizations, reduced to the quadratic
/// forms G^H G. Evaluating many beamformers against the same set gives a
/// smooth empirical outage field (common random numbers).
struct SharedTrialSet {
    std::vector<MatC> quad_forms; // n_alice x n_alice Hermitian per trial
    double gamma_ae = 0.0;
};

SharedTrialSet draw_shared_trials(const McScenario& scenario, long n_trials, const Rng& rng);

double empirical_outage_on(const SharedTrialSet& trials, const McScenario& scenario,
                           const VecC& w, double r_s);

struct ExhaustiveResult {
    VecC w_best;
    double p_best = 1.0;
};

/// Dense scan over unit-norm complex 2-vectors modulo global phase
/// (magnitude split x relative phase, `grid_resolution` points per axis),
/// minimizing the empirical outage over one shared trial set. Only defined
/// for n_alice = 2.
ExhaustiveResult exhaustive_search(const McScenario& scenario, double r_s, int grid_resolution,
                                   long n_trials, const Rng& rng);

} // namespace lbb
