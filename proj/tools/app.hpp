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


#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "config.hpp"
#include "output.hpp"

namespace mmoutage::app {

enum class Command { conditional, spatial, simulate, losball, sweep, convergence };

std::string to_string(Command command);
Command command_from_string(const std::string& name);

/// Exit codes of run().
enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_config = 2,
    exit_numerical = 3,
};

struct Options {
    Command command = Command::conditional;
    std::string config_path;
    std::string out;        ///< CSV path; empty writes to the output stream
    std::string svg;        ///< SVG path; empty disables the plot
    std::optional<std::uint64_t> seed;
    unsigned jobs = 1;
    std::optional<std::string> thresholds; ///< start_db:stop_db:count
    std::optional<int> rings;
    std::optional<std::string> rlos; ///< a radius, "value", "moment" or "bestfit"
    std::optional<double> snr_db;
    bool spatial = false; ///< random network instead of the configured realization
};

/// Config document with command-line overrides written into it, so the
/// digest covers what actually ran.
nlohmann::json apply_overrides(nlohmann::json doc, const Options& opts);

/// Runs one command. Diagnostics go to `err`, the CSV to `out` when no
/// path is given, and human-readable summaries to `log`.
int run(const Options& opts, std::ostream& out, std::ostream& log, std::ostream& err);

} // namespace mmoutage::app
