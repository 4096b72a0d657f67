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

#include <cmath>
#include <optional>
#include <stdexcept>

namespace lbb {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Polar coordinates relative to the transmitter at the origin.
struct PolarPoint {
    double distance = 0.0; // meters
    double angle = 0.0;    // radians, measured against the array axis
};

inline Point to_cartesian(const PolarPoint& p)
{
    return {p.distance * std::cos(p.angle), p.distance * std::sin(p.angle)};
}

inline PolarPoint to_polar(const Point& p)
{
    return {std::hypot(p.x, p.y), std::atan2(p.y, p.x)};
}

/// Node placement. Alice sits at the origin; Bob, Eve and (optionally) the
/// jammer are given in polar form. Everything else - jammer-to-Eve and
/// jammer-to-Bob distance/bearing, and the angles of arrival at Eve's
/// array - is always derived from the Cartesian images, never supplied
/// independently, so the geometry cannot be inconsistent.
class SystemGeometry {
public:
    static SystemGeometry from_polar(PolarPoint bob, PolarPoint eve,
                                     std::optional<PolarPoint> jammer = std::nullopt);
    static SystemGeometry from_cartesian(Point bob, Point eve,
                                         std::optional<Point> jammer = std::nullopt);

    const PolarPoint& bob() const { return bob_; }
    const PolarPoint& eve() const { return eve_; }
    bool has_jammer() const { return jammer_.has_value(); }
    const PolarPoint& jammer() const;

    Point bob_xy() const { return to_cartesian(bob_); }
    Point eve_xy() const { return to_cartesian(eve_); }
    Point jammer_xy() const { return to_cartesian(jammer()); }

    /// Bearing and distance of Eve as seen from the jammer.
    double d_je() const;
    double theta_je() const;
    /// Bearing and distance of Bob as seen from the jammer.
    double d_jb() const;
    double theta_jb() const;
    /// Angles of arrival at Eve's array (direction Eve -> transmitter).
    double phi_ae() const;
    double phi_je() const;

private:
    SystemGeometry() = default;
    void derive();

    PolarPoint bob_{};
    PolarPoint eve_{};
    std::optional<PolarPoint> jammer_{};
    double d_je_ = 0.0, theta_je_ = 0.0;
    double d_jb_ = 0.0, theta_jb_ = 0.0;
    double phi_ae_ = 0.0, phi_je_ = 0.0;
};

/// Rician factors, array sizes, spacings, powers and noise levels.
/// All K-factors and SINR-like quantities are linear here; dB exists only
/// at the CLI boundary.
struct ChannelParams {
    int n_alice = 2;  // N_a
    int n_eve = 2;    // N_e
    int n_jammer = 0; // N_j (>= 2 whenever the jammer transmits)

    double k_ab = 1.0;
    double k_ae = 1.0;
    double k_je = 0.0;
    double k_jb = 1.0;

    double eta_ab = 4.0;
    double eta_ae = 4.0;
    double eta_je = 4.0;

    double spacing_alice = 0.5; // wavelengths
    double spacing_jammer = 0.5;
    double spacing_eve = 0.5;

    double power_alice = 1.0;
    double power_jammer = 0.0;
    double noise_bob = 1.0; // variance
    double noise_eve = 1.0;

    void validate(bool jammer_active) const;
};

/// Average SNR scales of the three links (Eqs. of the form P d^-eta / sigma^2),
/// linear. The CLI may override these directly instead of going through
/// powers and distances.
struct LinkBudget {
    double gamma_ab = 1.0;
    double gamma_ae = 1.0;
    double gamma_je = 0.0;
};

LinkBudget derive_link_budget(const ChannelParams& params, const SystemGeometry& geometry);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

} // namespace lbb
