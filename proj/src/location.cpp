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

#include "lbb/location.hpp"

#include <cmath>
#include <stdexcept>

#include "lbb/beamformer.hpp"
#include "lbb/outage.hpp"

namespace lbb {

LocationUncertainty LocationUncertainty::isotropic(Point true_location, double c_sigma_t)
{
    if (c_sigma_t < 0.0) throw std::invalid_argument("c_sigma_t must be >= 0");
    return {true_location, c_sigma_t, c_sigma_t, 0.0};
}

LocationUncertainty LocationUncertainty::scaled(double factor) const
{
    if (!(factor >= 0.0)) throw std::invalid_argument("covariance factor must be >= 0");
    const double s = std::sqrt(factor);
    return {true_location, sigma_x * s, sigma_y * s, rho};
}

void LocationUncertainty::validate() const
{
    if (point_mass()) return;
    if (!(sigma_x > 0.0) || !(sigma_y > 0.0) || !(std::fabs(rho) < 1.0))
        throw std::invalid_argument("location covariance must be positive definite");
}

Point sample_location(const LocationUncertainty& u, Rng& rng)
{
    u.validate();
    if (u.point_mass()) return u.true_location;
    const double z1 = rng.standard_normal();
    const double z2 = rng.standard_normal();
    return {u.true_location.x + u.sigma_x * z1,
            u.true_location.y + u.sigma_y * (u.rho * z1 + std::sqrt(1.0 - u.rho * u.rho) * z2)};
}

OutageEstimate average_outage(const UncertaintyScenario& scenario, double tau,
                              const LocationUncertainty& u, int n_locations,
                              long n_trials_per_location, const Rng& rng)
{
    if (n_locations < 1) throw std::invalid_argument("n_locations must be >= 1");
    if (n_trials_per_location < 1)
        throw std::invalid_argument("n_trials_per_location must be >= 1");

    const McScenario truth =
        make_scenario(scenario.params, scenario.geometry, scenario.budget, scenario.seed);
    const int n_alice = scenario.params.n_alice;
    const double spacing = scenario.params.spacing_alice;

    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < n_locations; ++i) {
        Rng loc_rng = rng.substream(Stream::location, static_cast<std::uint64_t>(i));
        const Point believed = sample_location(u, loc_rng);
        const double believed_angle = std::atan2(believed.y, believed.x);
        const BeamBasis basis =
            build_basis(truth.h_ab, los_vector(n_alice, spacing, believed_angle));
        const Beamformer bf = blend(basis, tau);

        double p;
        if (scenario.jammer_on) {
            p = empirical_outage(truth, bf.w, scenario.r_s, n_trials_per_location, true, loc_rng)
                    .p_hat;
        } else {
            const EveEffectiveStats stats = eve_stats(scenario.params.k_ae, truth.g_ae_row,
                                                      bf.w, scenario.budget.gamma_ae);
            p = outage_no_jammer(scenario.r_s, bob_sinr(truth, bf.w), stats,
                                 scenario.params.n_eve);
        }
        sum += p;
        sum_sq += p * p;
    }

    OutageEstimate est;
    est.n_trials = n_locations;
    est.p_hat = sum / n_locations;
    const double var = std::max(0.0, (sum_sq - sum * sum / n_locations) / n_locations);
    est.std_err = n_locations > 1 ? std::sqrt(var / (n_locations - 1)) : 0.0;
    return est;
}

} // namespace lbb
