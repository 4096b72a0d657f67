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
// Test-only reference implementations. These deliberately share no code
// with the library paths they check: plain quadrature and product formulas
// only.

#pragma once

#include <cmath>
#include <functional>

namespace oracle {

// Adaptive Simpson on [a, b].
inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb, double whole, double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12)
{
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

// integral over [0, nu] of e^-t t^(mu-1)
inline double lower_gamma_quadrature(double mu, double nu)
{
    if (nu == 0.0) return 0.0;
    // integrable singularity at 0 for mu < 1: substitute t = u^(1/mu)
    return integrate([mu](double u) { return std::exp(-std::pow(u, 1.0 / mu)) / mu; }, 0.0,
                     std::pow(nu, mu), 1e-13 * std::pow(nu, mu));
}

// integral over [nu, inf) of e^-t t^(mu-1), nu > 0, any real mu
inline double upper_gamma_quadrature(double mu, double nu)
{
    // map [nu, inf) to [0, 1) via t = nu + s/(1-s)
    const auto g = [mu, nu](double s) {
        const double one_minus = 1.0 - s;
        const double t = nu + s / one_minus;
        return std::exp(-t) * std::pow(t, mu - 1.0) / (one_minus * one_minus);
    };
    return integrate(g, 0.0, 1.0 - 1e-12, 1e-14);
}

// Gamma(z) by Stirling's series with argument shifted far right through
// the recurrence Gamma(z) = Gamma(z+n) / (z (z+1) ... (z+n-1)).
inline double gamma_product_oracle(double z)
{
    double shifted = z;
    double denom = 1.0;
    while (shifted < 40.0) {
        denom *= shifted;
        shifted += 1.0;
    }
    const double x = shifted;
    // Stirling series with 1/x corrections
    const double series = 1.0 + 1.0 / (12.0 * x) + 1.0 / (288.0 * x * x) -
                          139.0 / (51840.0 * x * x * x) -
                          571.0 / (2488320.0 * x * x * x * x) +
                          163879.0 / (209018880.0 * std::pow(x, 5));
    const double stirling =
        std::sqrt(2.0 * M_PI / x) * std::pow(x / std::exp(1.0), x) * series;
    return stirling / denom;
}

} // namespace oracle
