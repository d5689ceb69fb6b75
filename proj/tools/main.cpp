// SPDX-License-Identifier: Apache-2.0
//
// mmoutage: outage analysis of finite wireless networks with randomly
// selected Gamma interference distributions
// Copyright (C) 2026 The mmoutage authors
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


#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "app.hpp"

using namespace mmoutage::app;

int main(int argc, char** argv)
{
    CLI::App cli{"Outage probability of finite mmWave networks with randomly selected Gamma interference"};
    cli.require_subcommand(1);
    cli.set_version_flag("--version", kToolVersion);

    Options opts;
    std::string mode = "conditional";

    const std::pair<Command, const char*> commands[] = {
        {Command::conditional, "exact outage conditioned on the configured network"},
        {Command::spatial, "outage averaged over random interferer positions (ring method)"},
        {Command::simulate, "Monte Carlo estimate of the outage curve"},
        {Command::losball, "moment-matched and best-fit LOS-ball radius plus the LOS-ball curve"},
        {Command::sweep, "exact, two LOS-ball radii and Monte Carlo on one threshold sweep"},
        {Command::convergence, "spatial outage with L and 2L rings and their largest discrepancy"},
    };
    for (const auto& [command, help] : commands) {
        auto* sub = cli.add_subcommand(to_string(command), help);
        sub->add_option("--config", opts.config_path, "JSON configuration")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", opts.out, "CSV output path (default: stdout)");
        sub->add_option("--svg", opts.svg, "also write an SVG plot");
        sub->add_option("--seed", opts.seed, "Monte Carlo seed (overrides simulation.seed)");
        sub->add_option("--jobs", opts.jobs, "worker threads; results do not depend on it")
            ->check(CLI::Range(1u, 1024u));
        sub->add_option("--thresholds", opts.thresholds, "threshold sweep start_db:stop_db:count");
        sub->add_option("--L", opts.rings, "number of rings for spatial averaging")->check(CLI::PositiveNumber);
        sub->add_option("--rlos", opts.rlos, "LOS-ball radius: a number, value, moment or bestfit");
        sub->add_option("--snr", opts.snr_db, "SNR in dB (overrides channel.snr_db)");
        if (command == Command::simulate || command == Command::losball || command == Command::sweep)
            sub->add_option("--mode", mode, "conditional (configured network) or spatial (random networks)")
                ->check(CLI::IsMember({"conditional", "spatial"}));
        sub->callback([&opts, command = command] { opts.command = command; });
    }

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return cli.exit(e);
    }
    opts.spatial = mode == "spatial";
    return run(opts, std::cout, std::cerr, std::cerr);
}
