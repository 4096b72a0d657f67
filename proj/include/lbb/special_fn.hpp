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

namespace lbb {

/// Gamma function, z > 0.
double gamma_fn(double z);

/// Lower incomplete gamma: integral of e^-t t^(mu-1) over [0, nu].
/// Requires mu > 0, nu >= 0.
double lower_incomplete_gamma(double mu, double nu);

/// Regularized lower incomplete gamma P(mu, nu) = gamma(mu, nu) / Gamma(mu).
double regularized_lower_gamma(double mu, double nu);

/// Upper incomplete gamma: integral of e^-t t^(mu-1) over [nu, inf).
/// Valid for any real mu (zero and negative included) as long as nu > 0.
/// Non-positive mu is reached through the downward recurrence
/// Gamma(mu, nu) = (Gamma(mu+1, nu) - nu^mu e^-nu) / mu from a positive
/// shifted argument (continued fraction directly for large nu).
double upper_incomplete_gamma(double mu, double nu);

/// e^nu * Gamma(mu, nu). Stays representable where Gamma(mu, nu) itself
/// underflows (large nu); used by the jammer moment sums.
double upper_incomplete_gamma_scaled(double mu, double nu);

/// Rising factorial n (n+1) ... (n+m-1); equals 1 at m = 0.
double pochhammer(int n, int m);

/// Survival function of the noncentral chi-square law with `dof` degrees of
/// freedom and noncentrality `lambda`, evaluated at x. Poisson-weighted
/// series of regularized gamma tails; reference tail for validation runs.
double noncentral_chi_square_sf(int dof, double lambda, double x);

} // namespace lbb
