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

#include "lbb/special_fn.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lbb {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

void require_finite(double v, const char* what)
{
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

// Series for the regularized lower tail; converges for nu < mu + 1.
// Returns P(mu, nu).
double lower_series(double mu, double nu)
{
    double term = 1.0 / mu;
    double sum = term;
    double a = mu;
    for (int k = 0; k < 10000; ++k) {
        a += 1.0;
        term *= nu / a;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps) break;
    }
    return sum * std::exp(-nu + mu * std::log(nu) - std::lgamma(mu));
}

// Lentz continued fraction for the upper tail. Returns cf with
// Gamma(mu, nu) = e^-nu nu^mu cf. Valid for nu > 0 and any real mu as
// long as nu is not far below mu + 1.
double upper_cf(double mu, double nu)
{
    double b = nu + 1.0 - mu;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - mu);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kEps) break;
    }
    return h;
}

// e^nu Gamma(0, nu) for small nu via the classic E1 expansion.
double scaled_e1_series(double nu)
{
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= -nu / k;
        sum -= term / k;
        if (std::fabs(term) < kEps * (std::fabs(sum) + 1.0)) break;
    }
    return std::exp(nu) * (-kEulerGamma - std::log(nu) + sum);
}

} // namespace

double gamma_fn(double z)
{
    require_finite(z, "gamma_fn argument");
    if (z <= 0.0) throw std::invalid_argument("gamma_fn requires z > 0");
    return std::tgamma(z);
}

double regularized_lower_gamma(double mu, double nu)
{
    require_finite(mu, "mu");
    require_finite(nu, "nu");
    if (mu <= 0.0) throw std::invalid_argument("regularized_lower_gamma requires mu > 0");
    if (nu < 0.0) throw std::invalid_argument("regularized_lower_gamma requires nu >= 0");
    if (nu == 0.0) return 0.0;
    if (nu < mu + 1.0) return lower_series(mu, nu);
    const double q = upper_cf(mu, nu) * std::exp(-nu + mu * std::log(nu) - std::lgamma(mu));
    return 1.0 - q;
}

double lower_incomplete_gamma(double mu, double nu)
{
    return regularized_lower_gamma(mu, nu) * gamma_fn(mu);
}

double upper_incomplete_gamma_scaled(double mu, double nu)
{
    require_finite(mu, "mu");
    require_finite(nu, "nu");
    if (nu <= 0.0) throw std::invalid_argument("upper_incomplete_gamma requires nu > 0");

    if (mu > 0.0) {
        if (nu >= mu + 1.0) return std::pow(nu, mu) * upper_cf(mu, nu);
        return std::exp(nu) * gamma_fn(mu) * (1.0 - lower_series(mu, nu));
    }
    if (mu == 0.0) {
        return nu >= 1.5 ? upper_cf(0.0, nu) : scaled_e1_series(nu);
    }

    // mu < 0: continued fraction holds directly once nu is not small;
    // otherwise climb down from a base argument in [0, 1).
    if (nu >= 1.5) return std::pow(nu, mu) * upper_cf(mu, nu);

    const int steps = static_cast<int>(std::ceil(-mu));
    const double base = mu + steps; // in [0, 1)
    double value;
    if (base == 0.0) {
        value = scaled_e1_series(nu);
    } else if (nu >= base + 1.0) {
        value = std::pow(nu, base) * upper_cf(base, nu);
    } else {
        value = std::exp(nu) * gamma_fn(base) * (1.0 - lower_series(base, nu));
    }
    double a = base;
    for (int j = 0; j < steps; ++j) {
        a -= 1.0;
        value = (value - std::pow(nu, a)) / a;
    }
    return value;
}

double upper_incomplete_gamma(double mu, double nu)
{
    return std::exp(-nu) * upper_incomplete_gamma_scaled(mu, nu);
}

double pochhammer(int n, int m)
{
    if (n < 1) throw std::invalid_argument("pochhammer requires n >= 1");
    if (m < 0) throw std::invalid_argument("pochhammer requires m >= 0");
    double r = 1.0;
    for (int i = 0; i < m; ++i) r *= static_cast<double>(n + i);
    return r;
}

double noncentral_chi_square_sf(int dof, double lambda, double x)
{
    if (dof < 1) throw std::invalid_argument("noncentral_chi_square_sf requires dof >= 1");
    if (lambda < 0.0 || x < 0.0)
        throw std::invalid_argument("noncentral_chi_square_sf requires lambda, x >= 0");
    if (x == 0.0) return 1.0;

    const double half_lambda = 0.5 * lambda;
    double weight = std::exp(-half_lambda); // Poisson(k=0) mass
    double cumulative = 0.0;
    double sf = 0.0;
    for (int k = 0; k < 100000; ++k) {
        sf += weight * (1.0 - regularized_lower_gamma(0.5 * dof + k, 0.5 * x));
        cumulative += weight;
        if (1.0 - cumulative < 1e-15 && k > half_lambda) break;
        weight *= half_lambda / (k + 1);
    }
    return std::min(1.0, sf);
}

} // namespace lbb
