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

#include "lbb/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lbb/beamformer.hpp"
#include "lbb/outage.hpp"
#include "lbb/special_fn.hpp"

namespace lbb {

namespace {

std::string trim(const std::string& s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& text, const std::string& where)
{
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ConfigError("value of " + where + " is not a number: '" + text + "'");
    }
    if (pos != text.size())
        throw ConfigError("value of " + where + " is not a number: '" + text + "'");
    return v;
}

} // namespace

Config Config::parse_string(const std::string& text)
{
    Config c;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(line_no) + ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError("line " + std::to_string(line_no) + ": empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        if (section.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": key outside any section");
        c.sections_[section][key] = value;
    }
    return c;
}

Config Config::parse_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_string(buffer.str());
}

bool Config::has(const std::string& section, const std::string& key) const
{
    const auto s = sections_.find(section);
    return s != sections_.end() && s->second.count(key) > 0;
}

std::string Config::get_string(const std::string& section, const std::string& key) const
{
    if (!has(section, key)) throw ConfigError("missing key " + section + "." + key);
    return sections_.at(section).at(key);
}

double Config::get_double(const std::string& section, const std::string& key) const
{
    return parse_double(get_string(section, key), section + "." + key);
}

long Config::get_long(const std::string& section, const std::string& key) const
{
    const double v = get_double(section, key);
    if (v != std::floor(v)) throw ConfigError(section + "." + key + " must be an integer");
    return static_cast<long>(v);
}

bool Config::get_bool(const std::string& section, const std::string& key) const
{
    std::string v = get_string(section, key);
    std::transform(v.begin(), v.end(), v.begin(), ::tolower);
    if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
    if (v == "off" || v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(section + "." + key + " must be on/off");
}

std::vector<double> Config::get_list(const std::string& section, const std::string& key) const
{
    const std::string raw = get_string(section, key);
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= raw.size()) {
        const auto comma = raw.find(',', start);
        const std::string item =
            trim(comma == std::string::npos ? raw.substr(start) : raw.substr(start, comma - start));
        if (!item.empty()) out.push_back(parse_double(item, section + "." + key));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw ConfigError(section + "." + key + " is an empty list");
    return out;
}

std::string Config::get_string_or(const std::string& section, const std::string& key,
                                  const std::string& fallback) const
{
    return has(section, key) ? get_string(section, key) : fallback;
}

double Config::get_double_or(const std::string& section, const std::string& key,
                             double fallback) const
{
    return has(section, key) ? get_double(section, key) : fallback;
}

long Config::get_long_or(const std::string& section, const std::string& key, long fallback) const
{
    return has(section, key) ? get_long(section, key) : fallback;
}

bool Config::get_bool_or(const std::string& section, const std::string& key, bool fallback) const
{
    return has(section, key) ? get_bool(section, key) : fallback;
}

bool Config::has_linear(const std::string& section, const std::string& key) const
{
    return has(section, key) || has(section, key + "_db");
}

double Config::get_linear(const std::string& section, const std::string& key) const
{
    const bool lin = has(section, key);
    const bool db = has(section, key + "_db");
    if (lin && db)
        throw ConfigError(section + "." + key + " given both linear and in dB; pick one");
    if (lin) return get_double(section, key);
    if (db) return db_to_linear(get_double(section, key + "_db"));
    throw ConfigError("missing key " + section + "." + key + " (or " + key + "_db)");
}

double Config::get_linear_or(const std::string& section, const std::string& key,
                             double fallback) const
{
    return has_linear(section, key) ? get_linear(section, key) : fallback;
}

namespace {

std::optional<PolarPoint> read_node(const Config& c, const std::string& d_key,
                                    const std::string& t_key, const std::string& xy_key,
                                    bool required)
{
    if (c.has("geometry", xy_key)) {
        const auto xy = c.get_list("geometry", xy_key);
        if (xy.size() != 2) throw ConfigError("geometry." + xy_key + " must be 'x,y'");
        return to_polar(Point{xy[0], xy[1]});
    }
    if (c.has("geometry", d_key) || c.has("geometry", t_key)) {
        return PolarPoint{c.get_double("geometry", d_key), c.get_double("geometry", t_key)};
    }
    if (required) throw ConfigError("missing key geometry." + d_key + "/" + t_key);
    return std::nullopt;
}

} // namespace

ExperimentConfig ExperimentConfig::from(const Config& c)
{
    ExperimentConfig e;

    e.params.n_alice = static_cast<int>(c.get_long("channel", "n_alice"));
    e.params.n_eve = static_cast<int>(c.get_long("channel", "n_eve"));
    e.params.n_jammer = static_cast<int>(c.get_long_or("channel", "n_jammer", 0));
    e.params.k_ab = c.get_linear("channel", "k_ab");
    e.params.k_ae = c.get_linear("channel", "k_ae");
    e.params.k_je = c.get_linear_or("channel", "k_je", 0.0);
    e.params.k_jb = c.get_linear_or("channel", "k_jb", e.params.k_ab);
    e.params.eta_ab = c.get_double_or("channel", "eta_ab", 4.0);
    e.params.eta_ae = c.get_double_or("channel", "eta_ae", 4.0);
    e.params.eta_je = c.get_double_or("channel", "eta_je", 4.0);
    e.params.spacing_alice = c.get_double_or("channel", "spacing_alice", 0.5);
    e.params.spacing_jammer = c.get_double_or("channel", "spacing_jammer", 0.5);
    e.params.spacing_eve = c.get_double_or("channel", "spacing_eve", 0.5);
    e.params.power_alice = c.get_double_or("channel", "power_alice", 1.0);
    e.params.power_jammer = c.get_double_or("channel", "power_jammer", 0.0);
    e.params.noise_bob = c.get_double_or("channel", "noise_bob", 1.0);
    e.params.noise_eve = c.get_double_or("channel", "noise_eve", 1.0);

    const auto bob = read_node(c, "d_ab", "theta_ab", "bob_xy", true);
    const auto eve = read_node(c, "d_ae", "theta_ae", "eve_xy", true);
    const auto jammer = read_node(c, "d_aj", "theta_aj", "jammer_xy", false);
    e.geometry = SystemGeometry::from_polar(*bob, *eve, jammer);

    e.jammer_on = c.get_bool_or("run", "jammer", false);
    if (e.jammer_on && !jammer) throw ConfigError("missing key geometry.d_aj/theta_aj");

    e.budget = derive_link_budget(e.params, e.geometry);
    if (c.has_linear("channel", "gamma_ab")) e.budget.gamma_ab = c.get_linear("channel", "gamma_ab");
    if (c.has_linear("channel", "gamma_ae")) e.budget.gamma_ae = c.get_linear("channel", "gamma_ae");
    if (c.has_linear("channel", "gamma_je")) e.budget.gamma_je = c.get_linear("channel", "gamma_je");

    e.r_s = c.get_double_or("run", "r_s", 1.0);
    const long seed = c.get_long_or("run", "seed", 1);
    if (seed < 0) throw ConfigError("run.seed must be >= 0");
    e.seed = static_cast<std::uint64_t>(seed);
    e.n_trials = c.get_long_or("run", "n_trials", 100000);
    e.tau_step = c.get_double_or("run", "tau_step", kDefaultTauStep);
    e.redraw_main = c.get_bool_or("run", "redraw_main", false);
    e.n_conditionings = static_cast<int>(c.get_long_or("run", "n_conditionings", 100));
    e.out_path = c.get_string_or("run", "out", "");

    if (c.has("uncertainty", "c_sigma_t")) {
        e.uncertainty.sigma_x = e.uncertainty.sigma_y = c.get_double("uncertainty", "c_sigma_t");
        e.uncertainty.rho = 0.0;
    } else {
        e.uncertainty.sigma_x = c.get_double_or("uncertainty", "sigma_x", 0.0);
        e.uncertainty.sigma_y = c.get_double_or("uncertainty", "sigma_y", 0.0);
        e.uncertainty.rho = c.get_double_or("uncertainty", "rho", 0.0);
    }
    if (c.has("uncertainty", "scales")) e.uncertainty.scales = c.get_list("uncertainty", "scales");
    e.uncertainty.n_locations =
        static_cast<int>(c.get_long_or("uncertainty", "n_locations", 200));
    e.uncertainty.n_trials_per_location =
        c.get_long_or("uncertainty", "n_trials_per_location", 1000);

    if (c.has("sweep", "gamma_ab_db")) e.sweep_gamma_ab_db = c.get_list("sweep", "gamma_ab_db");
    if (c.has("sweep", "k_ae_db")) e.sweep_k_ae_db = c.get_list("sweep", "k_ae_db");
    if (c.has("sweep", "n_alice")) e.sweep_n_alice = c.get_list("sweep", "n_alice");

    e.params.validate(e.jammer_on);
    return e;
}

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

// Closed-form outage of the blended beamformer at tau; Theorem-2 style
// gamma approximation when the jammer transmits (requires k_je = 0),
// NaN when no closed form exists.
double analytic_outage(const McScenario& sc, const Beamformer& bf, double r_s, bool jammer_on)
{
    const double gamma_b = bob_sinr(sc, bf.w);
    if (!jammer_on) {
        const EveEffectiveStats stats =
            eve_stats(sc.params.k_ae, sc.g_ae_row, bf.w, sc.budget.gamma_ae);
        return outage_no_jammer(r_s, gamma_b, stats, sc.params.n_eve);
    }
    if (sc.params.k_je != 0.0) return std::numeric_limits<double>::quiet_NaN();
    const JammerMoments m =
        jammer_moments(sc.params.n_eve, sc.params.n_jammer, sc.params.k_ae, sc.params.k_je,
                       sc.g_ae_row, bf.w, sc.budget.gamma_ae, sc.budget.gamma_je);
    return outage_with_jammer(r_s, gamma_b, m);
}

TauSearchResult analytic_search(const McScenario& sc, const BeamBasis& basis, double r_s,
                                bool jammer_on, double step)
{
    return search_tau(
        basis, [&](double tau) { return bob_sinr(sc, blend(basis, tau).w); },
        [&](double tau, double) { return analytic_outage(sc, blend(basis, tau), r_s, jammer_on); },
        step);
}

void run_tau_sweep_redraw(const ExperimentConfig& e, std::ostream& out)
{
    if (e.jammer_on && e.params.k_je != 0.0)
        throw ConfigError("redraw_main mode needs a closed form (jammer requires k_je = 0)");
    const std::vector<double> grid = tau_grid(e.tau_step);
    std::vector<std::vector<double>> per_tau(grid.size());
    Rng master(e.seed);
    for (int cond = 0; cond < e.n_conditionings; ++cond) {
        const std::uint64_t cond_seed = master.substream(0x636f6e64, cond).seed();
        const McScenario sc = make_scenario(e.params, e.geometry, e.budget, cond_seed);
        const BeamBasis basis = build_basis(sc.h_ab, sc.g_ae_row);
        for (std::size_t i = 0; i < grid.size(); ++i)
            per_tau[i].push_back(analytic_outage(sc, blend(basis, grid[i]), e.r_s, e.jammer_on));
    }
    out << "tau,p_out_mean,p_out_q10,p_out_q50,p_out_q90,n_conditionings\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::vector<double>& v = per_tau[i];
        std::sort(v.begin(), v.end());
        const auto quantile = [&](double q) {
            return v[static_cast<std::size_t>(std::lround(q * (v.size() - 1)))];
        };
        double mean = 0.0;
        for (double p : v) mean += p;
        mean /= v.size();
        out << format_number(grid[i]) << ',' << format_number(mean) << ','
            << format_number(quantile(0.1)) << ',' << format_number(quantile(0.5)) << ','
            << format_number(quantile(0.9)) << ',' << v.size() << '\n';
    }
}

} // namespace

void run_tau_sweep(const ExperimentConfig& e, std::ostream& out)
{
    if (e.redraw_main) {
        run_tau_sweep_redraw(e, out);
        return;
    }
    const McScenario sc = make_scenario(e.params, e.geometry, e.budget, e.seed);
    const BeamBasis basis = build_basis(sc.h_ab, sc.g_ae_row);
    const std::vector<double> grid = tau_grid(e.tau_step);
    const Rng rng(e.seed);
    out << "tau,p_out_analytic,p_out_mc,mc_stderr\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Beamformer bf = blend(basis, grid[i]);
        const double analytic = analytic_outage(sc, bf, e.r_s, e.jammer_on);
        const OutageEstimate mc =
            mc_outage_at_grid_point(sc, bf.w, e.r_s, e.n_trials, e.jammer_on, rng, i);
        out << format_number(grid[i]) << ',' << format_number(analytic) << ','
            << format_number(mc.p_hat) << ',' << format_number(mc.std_err) << '\n';
    }
}

namespace {

TauSearchResult minimized_outage(const ExperimentConfig& e, const ChannelParams& params,
                                 const LinkBudget& budget)
{
    const McScenario sc = make_scenario(params, e.geometry, budget, e.seed);
    const BeamBasis basis = build_basis(sc.h_ab, sc.g_ae_row);
    if (!e.jammer_on) return analytic_search(sc, basis, e.r_s, false, e.tau_step);
    if (params.k_je == 0.0) {
        JammerSearchInput input{sc, e.r_s, e.n_trials, true, Rng(e.seed)};
        return search_tau_jammer(basis, input, e.tau_step);
    }
    JammerSearchInput input{sc, e.r_s, e.n_trials, false, Rng(e.seed)};
    return search_tau_jammer(basis, input, e.tau_step);
}

} // namespace

void run_outage_vs_snr(const ExperimentConfig& e, std::ostream& out)
{
    out << "gamma_ab_db,n_alice,tau_star,p_out_star\n";
    for (double na : e.sweep_n_alice) {
        ChannelParams params = e.params;
        params.n_alice = static_cast<int>(na);
        for (double g_db : e.sweep_gamma_ab_db) {
            LinkBudget budget = e.budget;
            budget.gamma_ab = db_to_linear(g_db);
            const TauSearchResult r = minimized_outage(e, params, budget);
            out << format_number(g_db) << ',' << static_cast<int>(na) << ','
                << format_number(r.tau_star) << ',' << format_number(r.outage_star) << '\n';
        }
    }
}

void run_outage_vs_k(const ExperimentConfig& e, std::ostream& out)
{
    out << "k_ae_db,n_alice,tau_star,p_out_star\n";
    for (double na : e.sweep_n_alice) {
        ChannelParams params = e.params;
        params.n_alice = static_cast<int>(na);
        for (double k_db : e.sweep_k_ae_db) {
            params.k_ae = db_to_linear(k_db);
            const TauSearchResult r = minimized_outage(e, params, e.budget);
            out << format_number(k_db) << ',' << static_cast<int>(na) << ','
                << format_number(r.tau_star) << ',' << format_number(r.outage_star) << '\n';
        }
    }
}

void run_uncertainty_sweep(const ExperimentConfig& e, std::ostream& out)
{
    const LocationUncertainty base{e.geometry.eve_xy(), e.uncertainty.sigma_x,
                                   e.uncertainty.sigma_y, e.uncertainty.rho};
    const UncertaintyScenario scenario{e.params, e.geometry, e.budget, e.r_s, e.jammer_on, e.seed};
    const Rng rng(e.seed);
    out << "cov_scale,tau,p_out_avg,std_err\n";
    for (double scale : e.uncertainty.scales) {
        const LocationUncertainty u = base.scaled(scale);
        for (double tau : tau_grid(e.tau_step)) {
            const OutageEstimate est =
                average_outage(scenario, tau, u, e.uncertainty.n_locations,
                               e.uncertainty.n_trials_per_location, rng);
            out << format_number(scale) << ',' << format_number(tau) << ','
                << format_number(est.p_hat) << ',' << format_number(est.std_err) << '\n';
        }
    }
}

void run_beam_geometry(const ExperimentConfig& e, std::ostream& out)
{
    const McScenario sc = make_scenario(e.params, e.geometry, e.budget, e.seed);
    const BeamBasis basis = build_basis(sc.h_ab, sc.g_ae_row);
    const VecC h_dir = sc.h_ab.adjoint() / sc.h_ab.norm();

    const auto angle_vs_h = [&](const VecC& w) {
        const double overlap = std::min(1.0, std::abs(h_dir.dot(w)));
        return std::acos(overlap);
    };
    const auto emit = [&](const std::string& name, const VecC& w) {
        for (Eigen::Index i = 0; i < w.size(); ++i)
            out << name << ',' << i << ',' << format_number(w(i).real()) << ','
                << format_number(w(i).imag()) << ',' << format_number(angle_vs_h(w)) << '\n';
    };

    out << "entity,component,re,im,angle_vs_h_ab_rad\n";
    emit("h_ab_dir", h_dir);
    emit("w_null", basis.w_null);
    emit("w_span", basis.w_span);

    const TauSearchResult plain = analytic_search(sc, basis, e.r_s, false, e.tau_step);
    emit("w_star", blend(basis, plain.tau_star).w);

    if (e.jammer_on) {
        TauSearchResult jam;
        if (e.params.k_je == 0.0) {
            JammerSearchInput input{sc, e.r_s, e.n_trials, true, Rng(e.seed)};
            jam = search_tau_jammer(basis, input, e.tau_step);
        } else {
            JammerSearchInput input{sc, e.r_s, e.n_trials, false, Rng(e.seed)};
            jam = search_tau_jammer(basis, input, e.tau_step);
        }
        emit("w_star_jammer", blend(basis, jam.tau_star).w);
    }
}

void write_validation_csv(const std::vector<ValidationRow>& rows, std::ostream& out)
{
    out << "invariant,observed,bound,status\n";
    for (const ValidationRow& r : rows)
        out << r.invariant << ',' << format_number(r.observed) << ',' << format_number(r.bound)
            << ',' << (r.pass ? "pass" : "FAIL") << '\n';
}

int run_experiment(const std::string& subcommand, const ExperimentConfig& config,
                   std::ostream& out, std::ostream& err)
{
    try {
        if (subcommand == "tau-sweep") {
            run_tau_sweep(config, out);
        } else if (subcommand == "outage-vs-snr") {
            run_outage_vs_snr(config, out);
        } else if (subcommand == "outage-vs-k") {
            run_outage_vs_k(config, out);
        } else if (subcommand == "uncertainty-sweep") {
            run_uncertainty_sweep(config, out);
        } else if (subcommand == "beam-geometry") {
            run_beam_geometry(config, out);
        } else if (subcommand == "validate") {
            const auto rows = run_validation_suite(config);
            write_validation_csv(rows, out);
            bool ok = true;
            for (const ValidationRow& r : rows) {
                if (!r.pass) {
                    ok = false;
                    err << "validation failed: " << r.invariant << " (observed "
                        << format_number(r.observed) << ", bound " << format_number(r.bound)
                        << ")\n";
                }
            }
            return ok ? 0 : 2;
        } else {
            err << "unknown subcommand: " << subcommand << '\n';
            return 1;
        }
    } catch (const ConfigError& ex) {
        err << "config error: " << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace lbb
