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

#include <string>
#include <vector>

#include "mmoutage/conditional.hpp"
#include "mmoutage/model.hpp"
#include "mmoutage/spatial.hpp"

namespace mmoutage {

/// How the LOS-ball radius was chosen.
enum class LosBallSelection {
    explicit_value,
    moment_matched,
    best_fit,
};

std::string to_string(LosBallSelection selection);
LosBallSelection los_ball_selection_from_string(const std::string& name);

struct LosBallConfig {
    double radius = 0.0;
    LosBallSelection selection = LosBallSelection::moment_matched;

    /// The radius is only checked for explicit values.
    void validate(const NetworkGeometry& geom) const;
};

/// Radius of the disk whose area over the annulus equals the expected LOS area:
/// pi (R^2 - r_in^2) = integral over [r_in, r_out] of (1 - p_b(r)) 2 pi r dr.
double r_los_moment_match(const NetworkGeometry& geom);

/// p_b(r) = 1{r > R_LOS}.
BlockageFunction los_ball_blockage(double r_los);

/// Mixture in which interferers within R_LOS are LOS and all others NLOS.
StateMixture losball_mixture(const NetworkRealization& realization, double r_los, const Scenario& scenario);

double losball_conditional_outage(double s, const NetworkRealization& realization, double r_los,
                                  const Scenario& scenario);
OutageCurve losball_conditional_curve(const std::vector<double>& thresholds, const NetworkRealization& realization,
                                      double r_los, const Scenario& scenario);

/// L equal rings with R_LOS inserted as an extra boundary, so each ring lies
/// entirely inside or outside the ball; blockage is 1 outside and 0 inside.
RingPartition losball_partition(const NetworkGeometry& geom, int rings, double r_los);

double losball_spatial_outage(double s, double r_los, const Scenario& scenario, int rings);
OutageCurve losball_spatial_curve(const std::vector<double>& thresholds, double r_los, const Scenario& scenario,
                                  int rings);

struct BestFit {
    double radius;
    double mse; ///< mean square difference against the exact curve
};

/// R_LOS minimising the mean square error against the exact conditional
/// curve. The LOS-ball curve only changes when R_LOS crosses an interferer
/// distance, so every interval between sorted distances is tried and the
/// midpoint of the best one is returned.
BestFit best_fit_r_los_conditional(const std::vector<double>& thresholds, const NetworkRealization& realization,
                                   const Scenario& scenario);

/// R_LOS minimising the mean square error against the exact spatial curve,
/// by a coarse scan followed by golden-section refinement.
BestFit best_fit_r_los_spatial(const std::vector<double>& thresholds, const Scenario& scenario, int rings,
                               double tolerance = 1e-4);

} // namespace mmoutage
