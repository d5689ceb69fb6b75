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
#include <utility>
#include <vector>

#include "mmoutage/conditional.hpp"

namespace mmoutage::app {

inline constexpr const char* kToolVersion = "mmoutage 0.1.0";
inline constexpr const char* kCsvHeader = "beta_db,outage,stderr,method";

/// A curve plus the text written to the method column: the method name,
/// optionally followed by ":" and a qualifier such as "moment=4.45".
struct LabeledCurve {
    std::string label;
    OutageCurve curve;
};

std::string curve_label(const OutageCurve& curve, const std::string& qualifier = "");

struct RunManifest {
    std::string tool = kToolVersion;
    std::string command;
    std::string config_digest;
    std::optional<std::uint64_t> seed;
    std::string sampler;
    std::vector<std::string> outputs;
    std::string started;
    std::string finished;
    std::vector<std::pair<std::string, std::string>> notes;

    std::vector<std::pair<std::string, std::string>> entries() const;
};

/// UTC, ISO 8601 to the second.
std::string utc_timestamp();

/// 12 significant digits.
std::string format_number(double x);

/// Manifest as "# key: value" lines, the header, then one row per point.
void write_csv(std::ostream& out, const RunManifest& manifest, const std::vector<LabeledCurve>& curves);

struct CsvDocument {
    std::vector<std::pair<std::string, std::string>> manifest;
    std::vector<LabeledCurve> curves;
};

/// Inverse of write_csv. Rows with the same method label form one curve, in
/// order of first appearance. Throws std::runtime_error with the line number.
CsvDocument read_csv(std::istream& in);

/// Static plot of outage against threshold in dB: lines for analytic and
/// LOS-ball curves, dots with +/- 1 standard error bars for Monte Carlo.
void write_svg(std::ostream& out, const std::vector<LabeledCurve>& curves, const std::string& title,
               const RunManifest& manifest);

} // namespace mmoutage::app
