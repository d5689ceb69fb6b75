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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmoutage/model.hpp"

namespace mmoutage {

/// Raised when a computed probability leaves [0, 1] by more than rounding.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class CurveMethod {
    analytic_conditional,
    analytic_spatial,
    monte_carlo,
    los_ball,
};

/// "analytic-conditional", "analytic-spatial", "monte-carlo", "los-ball"
std::string to_string(CurveMethod method);
CurveMethod curve_method_from_string(const std::string& name);

struct OutagePoint {
    double threshold; ///< linear SINR threshold
    double outage;
    double standard_error = 0.0; ///< zero for analytic curves
};

struct OutageCurve {
    CurveMethod method = CurveMethod::analytic_conditional;
    std::vector<OutagePoint> points;
    std::string config_digest;
    std::optional<std::uint64_t> seed;
    std::string sampler; ///< generator and Gamma sampler identity for Monte Carlo curves

    /// Outage values in [0, 1] and nondecreasing in the threshold.
    bool is_valid() const;
};

/// Clamps v into [0, 1]. Excursions larger than 1e-9 raise NumericalError.
double clamp_probability(double v, const char* where);

/// Sums over compositions: for factor tables f_i(t), i < K, t <= T,
/// S_t = sum over (t_1, ..., t_K) with sum t_i = t of prod_i f_i(t_i).
/// The compositions are enumerated once at construction and stored sparsely
/// (only nonzero parts), so repeated evaluations only touch the factor tables.
class CompositionSums {
public:
    CompositionSums(int parts, int max_total);

    int parts() const { return parts_; }
    int max_total() const { return max_total_; }
    std::uint64_t size() const;

    /// log_factors[i][t] = ln f_i(t) (may be -inf). Returns S_0, ..., S_T.
    std::vector<double> evaluate(const std::vector<std::vector<double>>& log_factors) const;

private:
    struct Level {
        std::vector<std::uint32_t> offsets; // composition c uses entries [offsets[c], offsets[c + 1])
        std::vector<std::uint32_t> index;
        std::vector<std::uint16_t> value;
    };

    int parts_;
    int max_total_;
    std::vector<Level> levels_;
};

/// Outage from the composition sums S_t (t < m0) of the scaled interferer
/// factors and x = eta0 s c:
/// 1 - sum_t S_t exp(-x) sum_{k < m0 - t} x^k / k!.
double outage_from_composition_sums(const std::vector<double>& sums, double x);

/// ln of the per-interferer factor
/// p_0 [t == 0] + sum_j p_j NB(t; m_j, u_j),  u_j = eta0 s / (eta0 s + eta_j),
/// where NB(t; m, u) = Gamma(t + m) / (Gamma(m) t!) (1 - u)^m u^t, for t = 0..max_t.
std::vector<double> log_interferer_factors(const InterfererMixture& states, double eta0_s, int max_t);

/// Exact outage probability P[SINR <= s] for fixed interferer locations.
double conditional_outage(double s, const StateMixture& mixture, const ReferenceLink& ref);
double conditional_outage(double s, const StateMixture& mixture, const ReferenceLink& ref,
                          const CompositionSums& cache);
double conditional_outage(double s, const StateMixture& mixture, int m0, double eta0, double noise);

/// Pointwise conditional outage over ascending thresholds.
OutageCurve conditional_outage_curve(const std::vector<double>& thresholds, const StateMixture& mixture,
                                     const ReferenceLink& ref);

/// Replaces rounding-level decreases (<= 1e-12) with the running maximum;
/// larger decreases raise NumericalError.
void enforce_monotone(std::vector<OutagePoint>& points);

/// Throws std::invalid_argument unless thresholds are finite, >= 0 and ascending.
void check_thresholds(const std::vector<double>& thresholds);

} // namespace mmoutage
