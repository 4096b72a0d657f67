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

#include "lbb/channel.hpp"

#include <stdexcept>

namespace lbb {

namespace {

void require_positive(double v, const char* what)
{
    if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be > 0");
}

void require_finite_angle(double v, const char* what)
{
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

} // namespace

SystemGeometry SystemGeometry::from_polar(PolarPoint bob, PolarPoint eve,
                                          std::optional<PolarPoint> jammer)
{
    SystemGeometry g;
    g.bob_ = bob;
    g.eve_ = eve;
    g.jammer_ = jammer;
    g.derive();
    return g;
}

SystemGeometry SystemGeometry::from_cartesian(Point bob, Point eve, std::optional<Point> jammer)
{
    std::optional<PolarPoint> j;
    if (jammer) j = to_polar(*jammer);
    return from_polar(to_polar(bob), to_polar(eve), j);
}

const PolarPoint& SystemGeometry::jammer() const
{
    if (!jammer_) throw std::logic_error("geometry has no jammer");
    return *jammer_;
}

void SystemGeometry::derive()
{
    require_positive(bob_.distance, "d_ab");
    require_positive(eve_.distance, "d_ae");
    require_finite_angle(bob_.angle, "theta_ab");
    require_finite_angle(eve_.angle, "theta_ae");

    const Point e = to_cartesian(eve_);
    phi_ae_ = std::atan2(-e.y, -e.x); // direction Eve -> Alice (origin)

    if (jammer_) {
        require_positive(jammer_->distance, "d_aj");
        require_finite_angle(jammer_->angle, "theta_aj");
        const Point j = to_cartesian(*jammer_);
        const Point b = to_cartesian(bob_);
        d_je_ = std::hypot(e.x - j.x, e.y - j.y);
        theta_je_ = std::atan2(e.y - j.y, e.x - j.x);
        d_jb_ = std::hypot(b.x - j.x, b.y - j.y);
        theta_jb_ = std::atan2(b.y - j.y, b.x - j.x);
        phi_je_ = std::atan2(j.y - e.y, j.x - e.x);
        require_positive(d_je_, "d_je");
        require_positive(d_jb_, "d_jb");
    }
}

double SystemGeometry::d_je() const
{
    jammer();
    return d_je_;
}

double SystemGeometry::theta_je() const
{
    jammer();
    return theta_je_;
}

double SystemGeometry::d_jb() const
{
    jammer();
    return d_jb_;
}

double SystemGeometry::theta_jb() const
{
    jammer();
    return theta_jb_;
}

double SystemGeometry::phi_ae() const { return phi_ae_; }

double SystemGeometry::phi_je() const
{
    jammer();
    return phi_je_;
}

void ChannelParams::validate(bool jammer_active) const
{
    if (n_alice < 1) throw std::invalid_argument("n_alice must be >= 1");
    if (n_eve < 1) throw std::invalid_argument("n_eve must be >= 1");
    if (jammer_active && n_jammer < 2)
        throw std::invalid_argument("n_jammer must be >= 2 when the jammer transmits");
    for (double k : {k_ab, k_ae, k_je, k_jb})
        if (!(k >= 0.0) || !std::isfinite(k))
            throw std::invalid_argument("Rician factors must be finite and >= 0");
    require_positive(spacing_alice, "spacing_alice");
    require_positive(spacing_eve, "spacing_eve");
    if (jammer_active) require_positive(spacing_jammer, "spacing_jammer");
    require_positive(power_alice, "power_alice");
    if (jammer_active && power_jammer < 0.0)
        throw std::invalid_argument("power_jammer must be >= 0");
    require_positive(noise_bob, "noise_bob");
    require_positive(noise_eve, "noise_eve");
}

LinkBudget derive_link_budget(const ChannelParams& params, const SystemGeometry& geometry)
{
    LinkBudget b;
    b.gamma_ab = params.power_alice * std::pow(geometry.bob().distance, -params.eta_ab) /
                 params.noise_bob;
    b.gamma_ae = params.power_alice * std::pow(geometry.eve().distance, -params.eta_ae) /
                 params.noise_eve;
    b.gamma_je = geometry.has_jammer()
                     ? params.power_jammer * std::pow(geometry.d_je(), -params.eta_je) /
                           params.noise_eve
                     : 0.0;
    return b;
}

RowVecC los_vector(int n, double spacing, double theta)
{
    if (n < 1) throw std::invalid_argument("los_vector requires n >= 1");
    require_positive(spacing, "antenna spacing");
    require_finite_angle(theta, "steering angle");
    RowVecC v(n);
    const double step = 2.0 * M_PI * spacing * std::cos(theta);
    for (int m = 0; m < n; ++m) v(m) = std::polar(1.0, step * m);
    v(0) = 1.0;
    return v;
}

MatC los_matrix_to_eve(int n_tx, int n_eve, double spacing_tx, double spacing_eve, double theta,
                       double phi)
{
    if (n_eve < 1) throw std::invalid_argument("los_matrix_to_eve requires n_eve >= 1");
    const RowVecC g = los_vector(n_tx, spacing_tx, theta);
    VecC r(n_eve);
    const double step = -2.0 * M_PI * spacing_eve * std::cos(phi);
    for (int m = 0; m < n_eve; ++m) r(m) = std::polar(1.0, step * m);
    r(0) = 1.0;
    return r * g;
}

RowVecC sample_rician_vector(const RowVecC& los, double k_factor, Rng& rng)
{
    if (k_factor < 0.0) throw std::invalid_argument("Rician factor must be >= 0");
    const double los_w = std::sqrt(k_factor / (1.0 + k_factor));
    const double sc_w = std::sqrt(1.0 / (1.0 + k_factor));
    RowVecC out(los.size());
    for (Eigen::Index i = 0; i < los.size(); ++i)
        out(i) = los_w * los(i) + sc_w * rng.complex_gaussian();
    return out;
}

MatC sample_rician_matrix(const MatC& los, double k_factor, Rng& rng)
{
    if (k_factor < 0.0) throw std::invalid_argument("Rician factor must be >= 0");
    const double los_w = std::sqrt(k_factor / (1.0 + k_factor));
    const double sc_w = std::sqrt(1.0 / (1.0 + k_factor));
    MatC out(los.rows(), los.cols());
    for (Eigen::Index i = 0; i < los.rows(); ++i)
        for (Eigen::Index j = 0; j < los.cols(); ++j)
            out(i, j) = los_w * los(i, j) + sc_w * rng.complex_gaussian();
    return out;
}

} // namespace lbb
