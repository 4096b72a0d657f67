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
// Experiment configs, sweep runners and the validation suite behind the
// command-line tool. Sweeps write CSV (comma-separated, '.' decimal, LF,
// UTF-8); identical (config, seed) pairs produce byte-identical output.

#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "lbb/location.hpp"
#include "lbb/montecarlo.hpp"

namespace lbb {

/// Raised for malformed or incomplete configuration; the message names the
/// offending section/key.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Flat key-value text with [section] headers, '#'/';' comments.
/// dB values are only accepted in keys suffixed `_db` and are converted to
/// linear exactly once, here.
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key) const;
    long get_long(const std::string& section, const std::string& key) const;
    bool get_bool(const std::string& section, const std::string& key) const;
    std::vector<double> get_list(const std::string& section, const std::string& key) const;

    std::string get_string_or(const std::string& section, const std::string& key,
                              const std::string& fallback) const;
    double get_double_or(const std::string& section, const std::string& key,
                         double fallback) const;
    long get_long_or(const std::string& section, const std::string& key, long fallback) const;
    bool get_bool_or(const std::string& section, const std::string& key, bool fallback) const;

    /// Linear value of a quantity that may be given as `key` (linear) or
    /// `key_db` (decibel). Exactly one of the two may be present.
    double get_linear_or(const std::string& section, const std::string& key,
                         double fallback) const;
    bool has_linear(const std::string& section, const std::string& key) const;
    double get_linear(const std::string& section, const std::string& key) const;

private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

struct UncertaintyBlock {
    double sigma_x = 0.0;
    double sigma_y = 0.0;
    double rho = 0.0;
    std::vector<double> scales{1.0};
    int n_locations = 200;
    long n_trials_per_location = 1000;
};

/// Everything a run needs, resolved to linear units.
struct ExperimentConfig {
    ChannelParams params;
    SystemGeometry geometry = SystemGeometry::from_polar({1.0, 0.0}, {1.0, 0.5});
    LinkBudget budget;
    double r_s = 1.0;
    std::uint64_t seed = 1;
    long n_trials = 100000;
    double tau_step = kDefaultTauStep;
    bool jammer_on = false;
    bool redraw_main = false;
    int n_conditionings = 100;
    UncertaintyBlock uncertainty;
    std::vector<double> sweep_gamma_ab_db{6, 8, 10, 12, 14};
    std::vector<double> sweep_k_ae_db{0, 5, 10};
    std::vector<double> sweep_n_alice{2, 3, 4};
    std::string out_path; // empty = stdout

    static ExperimentConfig from(const Config& config);
};

/// One validation check: an observed metric against its bound.
struct ValidationRow {
    std::string invariant;
    double observed = 0.0;
    double bound = 0.0;
    bool pass = false;
};

std::vector<ValidationRow> run_validation_suite(const ExperimentConfig& config);

/// Sweep runners; each writes a complete CSV document to `out`.
void run_tau_sweep(const ExperimentConfig& config, std::ostream& out);
void run_outage_vs_snr(const ExperimentConfig& config, std::ostream& out);
void run_outage_vs_k(const ExperimentConfig& config, std::ostream& out);
void run_uncertainty_sweep(const ExperimentConfig& config, std::ostream& out);
void run_beam_geometry(const ExperimentConfig& config, std::ostream& out);
void write_validation_csv(const std::vector<ValidationRow>& rows, std::ostream& out);

/// Dispatch by subcommand name; returns the process exit code
/// (0 success, 1 config error, 2 validation failure) and reports problems
/// on `err`.
int run_experiment(const std::string& subcommand, const ExperimentConfig& config,
                   std::ostream& out, std::ostream& err);

/// CSV float formatting used everywhere (shortest round-trip, C locale).
std::string format_number(double v);

} // namespace lbb
