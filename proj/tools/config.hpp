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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mmoutage/losball.hpp"
#include "mmoutage/model.hpp"
#include "mmoutage/sim.hpp"

namespace mmoutage::app {

/// Invalid configuration; the message names the offending field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Threshold sweep in dB, `count` points from start to stop inclusive.
struct ThresholdGrid {
    double start_db = -10.0;
    double stop_db = 30.0;
    int count = 20;

    /// Parses "start_db:stop_db:count".
    static ThresholdGrid parse(const std::string& text);
    void validate() const;
    std::vector<double> db() const;
    std::vector<double> linear() const;
};

struct NetworkSpec {
    /// Explicit interferer positions; when empty one realization is drawn
    /// from `realization_seed`.
    std::vector<Interferer> interferers;
    std::uint64_t realization_seed = 1;
};

struct RunConfig {
    Scenario scenario;
    double snr_db = 20.0;
    NetworkSpec network;
    SimConfig sim;
    LosBallConfig losball;
    int rings = 10;
    ThresholdGrid thresholds;
    std::string digest; ///< "fnv1a64:" + hex of the canonical JSON

    /// The fixed network used by conditional commands.
    NetworkRealization realization() const;
};

std::string fnv1a64_hex(std::string_view bytes);

nlohmann::json read_json_file(const std::string& path);

/// Validates every section and computes the digest of `doc` as given
/// (compact dump, keys sorted).
RunConfig parse_config(const nlohmann::json& doc);

RunConfig load_config(const std::string& path);

} // namespace mmoutage::app
