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
// Average secrecy outage under Gaussian uncertainty in Eve's estimated
// position. Belief-vs-truth semantics: the transmitter builds its
// beamformer from a sampled (believed) location while the channel is
// generated from the true one - that is the only reading under which
// uncertainty can degrade secrecy, and it is the one implemented here.

#pragma once

#include "lbb/montecarlo.hpp"

namespace lbb {

/// Bivariate Gaussian uncertainty around Eve's true position. A zero
/// covariance (sigma_x = sigma_y = 0) is the documented point-mass case;
/// otherwise both sigmas must be positive and |rho| < 1.
struct LocationUncertainty {
    Point true_location{};
    double sigma_x = 0.0;
    double sigma_y = 0.0;
    double rho = 0.0;

    /// Convenience mapping from a single ranging-error scale:
    /// sigma_x = sigma_y = c_sigma_t, rho = 0. This is NOT a
    /// positioning-system error model, just an isotropic stand-in.
    static LocationUncertainty isotropic(Point true_location, double c_sigma_t);

    /// Covariance scaled by `factor` (sigmas scale by sqrt(factor)).
    LocationUncertainty scaled(double factor) const;

    bool point_mass() const { return sigma_x == 0.0 && sigma_y == 0.0; }
    void validate() const;
};

Point sample_location(const LocationUncertainty& u, Rng& rng);

/// Conditioning shared by all location draws of one averaging run.
struct UncertaintyScenario {
    ChannelParams params;
    SystemGeometry geometry; // true geometry (Eve at her true location)
    LinkBudget budget;       // budget at the true geometry
    double r_s = 1.0;
    bool jammer_on = false;
    std::uint64_t seed = 1;
};

/// Monte-Carlo average of the conditional outage over location draws.
/// Each draw is the transmitter's belief; the beamformer family is built
/// from it, blended at `tau`, and scored against the true channel
/// (closed form without the jammer, `n_trials_per_location` empirical
/// trials with it). std_err is the sample standard error of the
/// per-location outages.
OutageEstimate average_outage(const UncertaintyScenario& scenario, double tau,
                              const LocationUncertainty& u, int n_locations,
                              long n_trials_per_location, const Rng& rng);

} // namespace lbb
