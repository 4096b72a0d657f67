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

#pragma once

#include <functional>
#include <vector>

#include "lbb/montecarlo.hpp"

namespace lbb {

/// Orthonormal pair spanning the plane that contains the optimal
/// beamformer: `w_null` is the part of h_ab^H orthogonal to the Eve LOS
/// row space (transmitting on it puts Eve's deterministic component in a
/// null), `w_span` the part inside that row space. The Eve LOS matrix is
/// rank one, so the projector reduces to g^H g / ||g||^2; that rank-1 form
/// is used directly (the generic Gram inverse would be singular for
/// n_eve > 1).
struct BeamBasis {
    VecC w_null;
    VecC w_span;
    bool null_degenerate = false; // h_ab^H inside the LOS span
    bool span_degenerate = false; // h_ab orthogonal to the LOS row
};

BeamBasis build_basis(const RowVecC& h_ab, const RowVecC& g_ae_o);

struct Beamformer {
    VecC w;
    double tau = 0.0;
};

/// w(tau) = sqrt(tau) w_null + sqrt(1-tau) w_span, unit norm. A degenerate
/// basis vector forces tau to the surviving endpoint.
Beamformer blend(const BeamBasis& basis, double tau);

/// Grid {0, step, 2 step, ..., 1}. When 1/step is integral the points are
/// exact fractions i/n.
std::vector<double> tau_grid(double step);

struct TauSearchResult {
    double tau_star = 0.0;
    double outage_star = 1.0;
};

/// Exhaustive scan of the tau grid; ties break toward larger tau (the
/// Eve-nulling end). `gamma_b_of(tau)` supplies Bob's realized SINR for
/// the blended beamformer and `outage_of(tau, gamma_b)` the outage metric.
/// Grid points are independent; the reduction is a deterministic
/// left-to-right minimum, so results do not depend on evaluation order.
TauSearchResult search_tau(const BeamBasis& basis,
                           const std::function<double(double)>& gamma_b_of,
                           const std::function<double(double, double)>& outage_of, double step);

/// Default grid step: makes the grid error negligible next to the outage
/// scale while keeping the scan instant.
inline constexpr double kDefaultTauStep = 1e-2;

/// Inputs for the jammer-aware search.
struct JammerSearchInput {
    McScenario scenario;
    double r_s = 1.0;
    long n_trials = 10000;
    bool use_gamma_approx = false; // closed form instead of MC; needs k_je = 0
    Rng rng{0};
};

/// Modified scan for the jammer case: evaluates each grid point either
/// with the closed-form gamma approximation (k_je = 0 only) or with the
/// empirical estimator, drawing `n_trials` fresh scatter realizations per
/// grid point from substreams of (rng, grid index).
TauSearchResult search_tau_jammer(const BeamBasis& basis, const JammerSearchInput& input,
                                  double step);

/// The per-grid-point empirical evaluator used by search_tau_jammer; also
/// usable as the `outage_of` callback of the plain search so that both
/// searches see identical draws for identical seeds.
OutageEstimate mc_outage_at_grid_point(const McScenario& scenario, const VecC& w, double r_s,
                                       long n_trials, bool jammer_on, const Rng& rng,
                                       std::size_t grid_index);

} // namespace lbb
