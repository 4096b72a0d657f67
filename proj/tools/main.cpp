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

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "lbb/experiment.hpp"

namespace {

struct CliOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<long> trials;
    std::optional<double> grid;
};

int run(const std::string& subcommand, const CliOptions& opts)
{
    lbb::ExperimentConfig config;
    try {
        if (!opts.config_path.empty()) {
            config = lbb::ExperimentConfig::from(lbb::Config::parse_file(opts.config_path));
        } else if (subcommand != "validate") {
            std::cerr << "config error: --config is required for " << subcommand << '\n';
            return 1;
        } else {
            // validate runs on built-in canonical parameters
            config = lbb::ExperimentConfig::from(lbb::Config::parse_string(
                "[channel]\nn_alice = 2\nn_eve = 2\nk_ab_db = 10\nk_ae_db = 5\n"
                "[geometry]\nd_ab = 1\ntheta_ab = 1.0471975511965976\n"
                "d_ae = 1\ntheta_ae = 0.7853981633974483\n"
                "[run]\nn_trials = 10000\n"));
        }
    } catch (const std::exception& ex) {
        std::cerr << "config error: " << ex.what() << '\n';
        return 1;
    }
    if (opts.seed) config.seed = *opts.seed;
    if (opts.trials) config.n_trials = *opts.trials;
    if (opts.grid) config.tau_step = *opts.grid;
    if (opts.out) config.out_path = *opts.out;

    if (config.out_path.empty()) {
        return lbb::run_experiment(subcommand, config, std::cout, std::cerr);
    }
    std::ofstream out(config.out_path, std::ios::binary); // LF line endings as written
    if (!out) {
        std::cerr << "config error: cannot open output file " << config.out_path << '\n';
        return 1;
    }
    return lbb::run_experiment(subcommand, config, out, std::cerr);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"secrecy outage experiments for beamformed Rician wiretap channels"};
    app.require_subcommand(1);

    CliOptions opts;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", opts.config_path, "experiment config file");
        cmd->add_option("--seed", [&opts](const CLI::results_t& r) {
            opts.seed = std::stoull(r[0]);
            return true;
        }, "master seed (overrides config)");
        cmd->add_option("--out", [&opts](const CLI::results_t& r) {
            opts.out = r[0];
            return true;
        }, "output CSV path (default stdout)");
        cmd->add_option("--trials", [&opts](const CLI::results_t& r) {
            opts.trials = std::stol(r[0]);
            return true;
        }, "Monte-Carlo trials per evaluation (overrides config)");
        cmd->add_option("--grid", [&opts](const CLI::results_t& r) {
            opts.grid = std::stod(r[0]);
            return true;
        }, "tau grid step (overrides config)");
        return cmd;
    };

    add_common(app.add_subcommand("tau-sweep", "outage vs tau, closed form and Monte-Carlo"));
    add_common(app.add_subcommand("outage-vs-snr", "minimized outage vs main-channel SNR"));
    add_common(app.add_subcommand("outage-vs-k", "minimized outage vs Eve-channel Rician factor"));
    add_common(app.add_subcommand("uncertainty-sweep",
                                  "average outage vs tau under location uncertainty"));
    add_common(app.add_subcommand("beam-geometry", "optimal beamformer components"));
    add_common(app.add_subcommand("validate", "run the invariant suite (exit 0 iff all pass)"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    return run(app.get_subcommands().front()->get_name(), opts);
}
