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

#include <vector>

#include "mmoutage/conditional.hpp"
#include "mmoutage/model.hpp"

namespace mmoutage {

/// Concentric rings [T_k, T_{k+1}) covering the annulus, each with a blockage
/// probability frozen across the ring.
struct RingPartition {
    std::vector<double> boundaries; ///< T_0 = r_in < ... < T_L = r_out
    std::vector<double> blockage;   ///< one per ring

    int rings() const { return static_cast<int>(blockage.size()); }
    void validate(const NetworkGeometry& geom) const;
};

/// L equal-width rings with p_b frozen at each ring midpoint.
RingPartition ring_partition(const NetworkGeometry& geom, int rings);

/// Q_t^alpha(x) = 2F1(m + t, m + 2/alpha; m + 2/alpha + 1; -m / (x s eta0)) / (x^m (m + 2/alpha)).
double q_function(int t, double alpha, double m, double x, double s, double eta0);

/// ln Q_t^alpha(x); stays finite where Q itself over- or underflows.
double log_q_function(int t, double alpha, double m, double x, double s, double eta0);

/// Spatial and angular expectation of one interferer's factor
/// p_0 [t == 0] + sum_j p_j NB(t; m_j, eta0 s / (eta0 s + eta_j)) for an
/// interferer uniform on the annulus, for t = 0..max_t. Returned as logs.
std::vector<double> log_expected_interferer_factors(const RingPartition& partition, const Scenario& scenario,
                                                    double s, double eta0, int max_t);

/// Linear-domain convenience wrapper for a single t.
double expected_interferer_factor(int t, const RingPartition& partition, const Scenario& scenario, double s,
                                  double eta0);

/// Outage averaged over K interferers uniform on the annulus.
double spatially_averaged_outage(double s, const Scenario& scenario, const RingPartition& partition);
double spatially_averaged_outage(double s, const Scenario& scenario, int rings);

OutageCurve spatial_outage_curve(const std::vector<double>& thresholds, const Scenario& scenario,
                                 const RingPartition& partition);
OutageCurve spatial_outage_curve(const std::vector<double>& thresholds, const Scenario& scenario, int rings);

} // namespace mmoutage
