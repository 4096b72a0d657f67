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
// The `validate` subcommand: every library-level invariant checked against
// its bound on one seeded run. Canonical parameters are built in (the same
// two-antenna-Eve setup the sweep presets use); the config only contributes
// the seed and the smoke-level trial count.

#include <cmath>
#include <sstream>

#include "lbb/beamformer.hpp"
#include "lbb/experiment.hpp"
#include "lbb/outage.hpp"
#include "lbb/special_fn.hpp"

namespace lbb {

namespace {

struct Suite {
    std::vector<ValidationRow> rows;
    void check(const std::string& name, double observed, double bound)
    {
        rows.push_back({name, observed, bound, observed <= bound});
    }
};

ChannelParams canonical_params(int n_alice, bool jammer)
{
    ChannelParams p;
    p.n_alice = n_alice;
    p.n_eve = 2;
    p.n_jammer = jammer ? 4 : 0;
    p.k_ab = db_to_linear(10.0);
    p.k_ae = db_to_linear(5.0);
    p.k_je = 0.0;
    p.k_jb = p.k_ab;
    return p;
}

SystemGeometry canonical_geometry(bool jammer)
{
    std::optional<PolarPoint> j;
    if (jammer) j = PolarPoint{1.0, 0.0};
    return SystemGeometry::from_polar({1.0, M_PI / 3.0}, {1.0, M_PI / 4.0}, j);
}

LinkBudget canonical_budget(bool jammer)
{
    return {db_to_linear(10.0), db_to_linear(10.0), jammer ? db_to_linear(10.0) : 0.0};
}

RowVecC random_row(int n, Rng& rng)
{
    RowVecC v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.complex_gaussian();
    return v;
}

} // namespace

std::vector<ValidationRow> run_validation_suite(const ExperimentConfig& config)
{
    Suite s;
    Rng rng(config.seed);
    const long smoke_trials = std::max<long>(1000, std::min<long>(config.n_trials, 100000));
    const double r_s = 1.0;

    // --- steering vectors and channel sampling -------------------------
    {
        double worst = 0.0;
        double worst_sv = 0.0;
        Rng r = rng.substream(100, 0);
        for (int rep = 0; rep < 50; ++rep) {
            const int n = 1 + static_cast<int>(r.uniform() * 6);
            const int ne = 1 + static_cast<int>(r.uniform() * 3);
            const double spacing = 0.25 + r.uniform();
            const double theta = (r.uniform() - 0.5) * 2.0 * M_PI;
            const double phi = (r.uniform() - 0.5) * 2.0 * M_PI;
            const RowVecC v = los_vector(n, spacing, theta);
            for (int i = 0; i < n; ++i) worst = std::max(worst, std::fabs(std::abs(v(i)) - 1.0));
            const MatC g = los_matrix_to_eve(n, ne, spacing, 0.5, theta, phi);
            Eigen::JacobiSVD<MatC> svd(g);
            if (svd.singularValues().size() > 1) worst_sv = std::max(worst_sv, svd.singularValues()(1));
        }
        s.check("los_unit_modulus", worst, 1e-12);
        s.check("los_matrix_rank_one", worst_sv, 1e-12);
    }
    {
        double worst = 0.0;
        Rng r = rng.substream(101, 0);
        const RowVecC los = los_vector(4, 0.5, 0.9);
        for (double k : {0.0, 1.0, 10.0}) {
            double acc = 0.0;
            const long draws = smoke_trials;
            for (long i = 0; i < draws; ++i) acc += sample_rician_vector(los, k, r).squaredNorm();
            worst = std::max(worst, std::fabs(acc / (4.0 * draws) - 1.0));
        }
        s.check("rician_second_moment", worst, 0.02);
    }
    {
        double worst = 0.0;
        Rng r = rng.substream(102, 0);
        for (int rep = 0; rep < 200; ++rep) {
            const PolarPoint p{0.1 + 100.0 * r.uniform(), (r.uniform() - 0.5) * 2.0 * M_PI};
            const PolarPoint back = to_polar(to_cartesian(p));
            worst = std::max(worst, std::fabs(back.distance - p.distance) / p.distance);
            const SystemGeometry g = SystemGeometry::from_polar(
                {1.0, 0.3}, p, PolarPoint{2.0 + r.uniform(), r.uniform()});
            const Point e = g.eve_xy();
            const Point j = g.jammer_xy();
            const double direct = std::hypot(e.x - j.x, e.y - j.y);
            worst = std::max(worst, std::fabs(g.d_je() - direct) / direct);
        }
        s.check("geometry_roundtrip", worst, 1e-9);
    }

    // --- gamma family ---------------------------------------------------
    {
        Rng r = rng.substream(103, 0);
        double worst = 0.0;
        for (int rep = 0; rep < 1000; ++rep) {
            const double mu = 0.1 + 29.9 * r.uniform();
            const double nu = 50.0 * r.uniform() + 1e-6;
            const double whole = gamma_fn(mu);
            const double split =
                lower_incomplete_gamma(mu, nu) + upper_incomplete_gamma(mu, nu);
            worst = std::max(worst, std::fabs(split - whole) / whole);
        }
        s.check("gamma_splitting_identity", worst, 1e-9);
    }
    {
        Rng r = rng.substream(104, 0);
        double worst = 0.0;
        for (int rep = 0; rep < 1000; ++rep) {
            const double mu = -5.0 + 4.99 * r.uniform(); // stays negative
            const double nu = 0.01 + 20.0 * r.uniform();
            const double lhs = upper_incomplete_gamma(mu + 1.0, nu);
            const double rhs =
                mu * upper_incomplete_gamma(mu, nu) + std::pow(nu, mu) * std::exp(-nu);
            worst = std::max(worst, std::fabs(lhs - rhs) /
                                        std::max(std::fabs(lhs), 1e-300));
        }
        s.check("gamma_recurrence_negative_mu", worst, 1e-8);
    }
    {
        Rng r = rng.substream(105, 0);
        double worst = 0.0;
        long violations = 0;
        double prev = -1.0;
        for (int rep = 0; rep < 1000; ++rep) {
            const double x = 0.01 + 30.0 * r.uniform();
            worst = std::max(worst,
                             std::fabs(lower_incomplete_gamma(1.0, x) - (1.0 - std::exp(-x))));
            const double nu = 0.05 * (rep + 1);
            const double v = lower_incomplete_gamma(2.5, nu);
            if (v <= prev) ++violations;
            prev = v;
        }
        s.check("gamma_lower_exponential", worst, 1e-12);
        s.check("gamma_lower_strictly_increasing", static_cast<double>(violations), 0.0);
        s.check("pochhammer_values",
                std::fabs(pochhammer(3, 0) - 1.0) + std::fabs(pochhammer(2, 3) - 24.0) +
                    std::fabs(pochhammer(5, 4) - 1680.0),
                0.0);
    }

    // --- beamformer basis -----------------------------------------------
    {
        Rng r = rng.substream(106, 0);
        double worst_orth = 0.0, worst_norm = 0.0, worst_gain = 0.0, worst_exp = 0.0;
        for (int rep = 0; rep < 200; ++rep) {
            const int n = 2 + static_cast<int>(r.uniform() * 4);
            const RowVecC h = random_row(n, r);
            const RowVecC g = los_vector(n, 0.5, (r.uniform() - 0.5) * M_PI);
            const BeamBasis basis = build_basis(h, g);
            worst_orth = std::max(worst_orth, std::abs(basis.w_null.dot(basis.w_span)));
            worst_orth = std::max(worst_orth, std::abs((g * basis.w_null)(0)));
            const double span_gain = std::norm((g * basis.w_span)(0));
            for (double tau : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                const Beamformer bf = blend(basis, tau);
                worst_norm = std::max(worst_norm, std::fabs(bf.w.norm() - 1.0));
                worst_gain = std::max(worst_gain, std::fabs(std::norm((g * bf.w)(0)) -
                                                            (1.0 - tau) * span_gain));
                const std::complex<double> c1 = (h * basis.w_null)(0);
                const std::complex<double> c2 = (h * basis.w_span)(0);
                const double expansion = tau * std::norm(c1) + (1.0 - tau) * std::norm(c2) +
                                         2.0 * std::sqrt(tau * (1.0 - tau)) *
                                             (c1 * std::conj(c2)).real();
                worst_exp = std::max(worst_exp, std::fabs(std::norm((h * bf.w)(0)) - expansion) /
                                                    h.squaredNorm());
            }
        }
        s.check("basis_orthogonality", worst_orth, 1e-10);
        s.check("blend_unit_norm", worst_norm, 1e-10);
        s.check("blend_eve_gain_law", worst_gain, 1e-9);
        s.check("bob_sinr_expansion", worst_exp, 1e-10);
    }

    // --- jamming precoder and SINR routes --------------------------------
    {
        Rng r = rng.substream(107, 0);
        double worst_null = 0.0, worst_orth = 0.0;
        for (int rep = 0; rep < 1000; ++rep) {
            const int n = 2 + static_cast<int>(r.uniform() * 5);
            const RowVecC h = random_row(n, r);
            const MatC w_an = an_precoder(h);
            worst_null = std::max(worst_null, (h * w_an).norm() / h.norm());
            const MatC gram = w_an.adjoint() * w_an - MatC::Identity(n - 1, n - 1);
            worst_orth = std::max(worst_orth, gram.cwiseAbs().maxCoeff());
        }
        s.check("an_precoder_null_space", worst_null, 1e-10);
        s.check("an_precoder_orthonormal", worst_orth, 1e-10);
    }
    {
        Rng r = rng.substream(108, 0);
        const ChannelParams p = canonical_params(3, true);
        long dominance_violations = 0;
        double worst_rel = 0.0;
        const VecC w = VecC::Ones(3) / std::sqrt(3.0);
        const MatC g_ae_o = los_matrix_to_eve(3, 2, 0.5, 0.5, M_PI / 4.0, 0.2);
        const MatC g_je_o = los_matrix_to_eve(4, 2, 0.5, 0.5, 0.8, -0.4);
        const MatC w_an = an_precoder(random_row(4, r));
        for (int rep = 0; rep < 1000; ++rep) {
            const MatC g_ae = sample_rician_matrix(g_ae_o, p.k_ae, r);
            const MatC g_je = sample_rician_matrix(g_je_o, p.k_je, r);
            const double with_j = sinr_eve_jammer(g_ae, g_je, w_an, w, 10.0, 10.0, 4);
            const double without = sinr_eve_no_jammer(g_ae, w, 10.0);
            if (with_j > without * (1.0 + 1e-9)) ++dominance_violations;
            const double eig = sinr_eve_jammer_eigenroute(g_ae, g_je, w_an, w, 10.0, 10.0, 4);
            worst_rel = std::max(worst_rel, std::fabs(with_j - eig) / with_j);
        }
        s.check("jammer_sinr_dominance", static_cast<double>(dominance_violations), 0.0);
        s.check("sinr_eigenroute_agreement", worst_rel, 1e-8);
    }

    // --- outage formulas vs the Monte-Carlo oracle ------------------------
    const McScenario plain =
        make_scenario(canonical_params(2, false), canonical_geometry(false),
                      canonical_budget(false), config.seed);
    const BeamBasis basis = build_basis(plain.h_ab, plain.g_ae_row);
    const Beamformer bf_half = blend(basis, 0.5);
    {
        const OutageEstimate a =
            empirical_outage(plain, bf_half.w, r_s, smoke_trials, false, rng.substream(109, 0));
        const OutageEstimate b =
            empirical_outage(plain, bf_half.w, r_s, smoke_trials, false, rng.substream(109, 0));
        s.check("mc_reproducibility",
                std::fabs(a.p_hat - b.p_hat) + std::fabs(a.std_err - b.std_err), 0.0);
    }
    {
        long violations = 0;
        const EveEffectiveStats stats =
            eve_stats(plain.params.k_ae, plain.g_ae_row, bf_half.w, plain.budget.gamma_ae);
        double prev_gb = 2.0;
        for (double gamma_b : {0.0, 1.0, 3.0, 8.0, 15.0, 40.0}) {
            const double p = outage_no_jammer(r_s, gamma_b, stats, 2);
            if (p < 0.0 || p > 1.0) ++violations;
            if (p > prev_gb + 1e-15) ++violations; // non-increasing in gamma_b
            prev_gb = p;
        }
        double prev_rs = -1.0;
        for (double rate : {0.1, 0.5, 1.0, 2.0, 4.0}) {
            const double p = outage_no_jammer(rate, 10.0, stats, 2);
            if (p < prev_rs - 1e-15) ++violations; // non-decreasing in r_s
            prev_rs = p;
        }
        s.check("outage_range_monotonicity", static_cast<double>(violations), 0.0);
    }
    {
        // arrival angle at Eve must not move the outage beyond noise
        const McScenario at_zero =
            make_scenario(plain.params, canonical_geometry(false), plain.budget, config.seed, 0.0);
        const McScenario at_third = make_scenario(plain.params, canonical_geometry(false),
                                                  plain.budget, config.seed, M_PI / 3.0);
        const OutageEstimate p0 =
            empirical_outage(at_zero, bf_half.w, r_s, smoke_trials, false, rng.substream(110, 0));
        const OutageEstimate p1 =
            empirical_outage(at_third, bf_half.w, r_s, smoke_trials, false, rng.substream(111, 0));
        const double combined = std::sqrt(p0.std_err * p0.std_err + p1.std_err * p1.std_err);
        s.check("phi_ae_invariance_mc", std::fabs(p0.p_hat - p1.p_hat), 3.0 * combined);
    }
    {
        // estimator vs the exact noncentral-chi-square tail
        const double threshold = secrecy_threshold(r_s, bob_sinr(plain, bf_half.w));
        const EveEffectiveStats stats =
            eve_stats(plain.params.k_ae, plain.g_ae_row, bf_half.w, plain.budget.gamma_ae);
        const double sigma_sq = 1.0 / (1.0 + plain.params.k_ae);
        const double lambda = 2.0 * plain.params.n_eve * stats.effective_k / (1.0 + plain.params.k_ae) / sigma_sq;
        const double exact = noncentral_chi_square_sf(
            2 * plain.params.n_eve, lambda,
            2.0 * threshold / (plain.budget.gamma_ae * sigma_sq));
        const OutageEstimate mc =
            empirical_outage(plain, bf_half.w, r_s, smoke_trials, false, rng.substream(112, 0));
        s.check("mc_matches_exact_tail", std::fabs(mc.p_hat - exact),
                3.0 * std::max(mc.std_err, 1e-6));
        // and the mean normalization of Eve's SNR
        Rng r = rng.substream(113, 0);
        double acc = 0.0;
        MatC g(plain.params.n_eve, plain.params.n_alice);
        for (long i = 0; i < smoke_trials; ++i) {
            g = sample_rician_matrix(plain.g_ae_o, plain.params.k_ae, r);
            acc += sinr_eve_no_jammer(g, bf_half.w, plain.budget.gamma_ae);
        }
        const double expected = plain.params.n_eve * stats.branch_mean_snr;
        s.check("eve_mean_is_per_branch_mean_times_n_eve",
                std::fabs(acc / smoke_trials - expected) / expected, 0.03);
    }

    // --- jammer moments and closed forms ----------------------------------
    const McScenario jam = make_scenario(canonical_params(3, true), canonical_geometry(true),
                                         canonical_budget(true), config.seed);
    const BeamBasis jam_basis = build_basis(jam.h_ab, jam.g_ae_row);
    const Beamformer jam_bf = blend(jam_basis, 0.5);
    {
        const JammerMoments m =
            jammer_moments(jam.params.n_eve, jam.params.n_jammer, jam.params.k_ae,
                           jam.params.k_je, jam.g_ae_row, jam_bf.w, jam.budget.gamma_ae,
                           jam.budget.gamma_je);
        Rng r = rng.substream(114, 0);
        double m1 = 0.0, m2 = 0.0;
        const long n = std::max<long>(smoke_trials, 50000);
        for (long i = 0; i < n; ++i) {
            const MatC g_ae = sample_rician_matrix(jam.g_ae_o, jam.params.k_ae, r);
            const MatC g_je = sample_rician_matrix(jam.g_je_o, jam.params.k_je, r);
            const double ge = sinr_eve_jammer(g_ae, g_je, jam.w_an, jam_bf.w,
                                              jam.budget.gamma_ae, jam.budget.gamma_je,
                                              jam.params.n_jammer);
            m1 += ge;
            m2 += ge * ge;
        }
        m1 /= n;
        m2 /= n;
        s.check("jammer_moment_mean", std::fabs(m.mean - m1) / m1, 0.02);
        s.check("jammer_moment_second",
                std::fabs(m.variance + m.mean * m.mean - m2) / m2, 0.05);
        s.check("jammer_moment_shape_consistency",
                std::fabs(m.alpha * m.beta - m.mean) / m.mean +
                    std::fabs(m.alpha * m.beta * m.beta - m.variance) / m.variance,
                1e-12);
    }
    {
        // vanishing jammer power: closed form must meet the no-jammer law
        double worst = 0.0;
        for (double tau : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const Beamformer b = blend(jam_basis, tau);
            const double gamma_b = bob_sinr(jam, b.w);
            const JammerMoments weak =
                jammer_moments(jam.params.n_eve, jam.params.n_jammer, jam.params.k_ae, 0.0,
                               jam.g_ae_row, b.w, jam.budget.gamma_ae, 1e-6);
            const EveEffectiveStats stats =
                eve_stats(jam.params.k_ae, jam.g_ae_row, b.w, jam.budget.gamma_ae);
            worst = std::max(worst,
                             std::fabs(outage_with_jammer(r_s, gamma_b, weak) -
                                       outage_no_jammer(r_s, gamma_b, stats, jam.params.n_eve)));
        }
        s.check("jammer_weak_limit_continuity", worst, 1e-3);
    }

    // --- optimality of the blended family (smoke) -------------------------
    {
        const long trials = std::min<long>(smoke_trials, 20000);
        const Rng ex_rng = rng.substream(115, 0);
        const ExhaustiveResult ex = exhaustive_search(plain, r_s, 24, trials, ex_rng);
        const SharedTrialSet set = draw_shared_trials(plain, trials, ex_rng);
        double family_min = 2.0;
        for (double tau : tau_grid(0.01))
            family_min =
                std::min(family_min, empirical_outage_on(set, plain, blend(basis, tau).w, r_s));
        s.check("tau_family_optimality", family_min - ex.p_best, 1e-3);
    }

    // --- location uncertainty ---------------------------------------------
    {
        Rng r = rng.substream(116, 0);
        const LocationUncertainty u{{10.0, -5.0}, 3.0, 2.0, 0.6};
        double mx = 0.0, my = 0.0, mxy = 0.0, vx = 0.0, vy = 0.0;
        const long n = smoke_trials;
        for (long i = 0; i < n; ++i) {
            const Point pt = sample_location(u, r);
            const double dx = pt.x - u.true_location.x;
            const double dy = pt.y - u.true_location.y;
            mx += dx;
            my += dy;
            vx += dx * dx;
            vy += dy * dy;
            mxy += dx * dy;
        }
        const double corr = (mxy / n - mx / n * my / n) /
                            std::sqrt((vx / n - mx / n * mx / n) * (vy / n - my / n * my / n));
        s.check("location_sample_correlation", std::fabs(corr - u.rho), 0.05);
        const UncertaintyScenario us{plain.params, canonical_geometry(false), plain.budget,
                                     r_s, false, config.seed};
        const LocationUncertainty point{canonical_geometry(false).eve_xy(), 0.0, 0.0, 0.0};
        const OutageEstimate avg = average_outage(us, 0.5, point, 8, 1, rng.substream(117, 0));
        const EveEffectiveStats stats =
            eve_stats(plain.params.k_ae, plain.g_ae_row, bf_half.w, plain.budget.gamma_ae);
        const double certain = outage_no_jammer(r_s, bob_sinr(plain, bf_half.w), stats, 2);
        s.check("uncertainty_point_mass", std::fabs(avg.p_hat - certain), 1e-6);
    }

    // --- output determinism -------------------------------------------------
    {
        ExperimentConfig small = config;
        small.params = canonical_params(2, false);
        small.geometry = canonical_geometry(false);
        small.budget = canonical_budget(false);
        small.jammer_on = false;
        small.redraw_main = false;
        small.n_trials = 2000;
        small.tau_step = 0.1;
        std::ostringstream a, b;
        run_tau_sweep(small, a);
        run_tau_sweep(small, b);
        s.check("csv_determinism", a.str() == b.str() ? 0.0 : 1.0, 0.0);
    }

    return s.rows;
}

} // namespace lbb
