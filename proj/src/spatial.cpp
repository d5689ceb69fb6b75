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

#include "mmoutage/spatial.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mmoutage/specialfn.hpp"

namespace mmoutage {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kMaxLogArgument = 690.0; // keeps |z| below ~1e300

// ln[ |z|^m 2F1(m + t, b; b + 1; z) T^2 / b ] with b = m + 2/alpha and
// z = -m T^alpha / (gain s eta0): the integral of r v^t (1 + v)^(-t-m) over
// [0, T] times alpha, where v = gain s eta0 r^-alpha / m.
double log_ring_integral(int t, double alpha, double m, double log_gain, double log_s_eta0, double T)
{
    const double b = m + 2.0 / alpha;
    const double log_abs_z = std::min(std::log(m) - log_gain + alpha * std::log(T) - log_s_eta0, kMaxLogArgument);
    const double z = -std::exp(log_abs_z);
    return m * log_abs_z + log_gauss_2f1(m + t, b, b + 1.0, z) + 2.0 * std::log(T) - std::log(b);
}

} // namespace

void RingPartition::validate(const NetworkGeometry& geom) const
{
    if (blockage.empty())
        throw std::invalid_argument("ring partition needs at least one ring");
    if (boundaries.size() != blockage.size() + 1)
        throw std::invalid_argument("ring partition needs one more boundary than rings");
    if (std::fabs(boundaries.front() - geom.r_in) > 1e-12 * geom.r_out
        || std::fabs(boundaries.back() - geom.r_out) > 1e-12 * geom.r_out)
        throw std::invalid_argument("ring partition must span [r_in, r_out]");
    for (std::size_t k = 0; k + 1 < boundaries.size(); ++k)
        if (!(boundaries[k + 1] > boundaries[k]))
            throw std::invalid_argument("ring boundaries must be strictly increasing");
    for (double p : blockage)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("ring blockage probability outside [0, 1]");
}

RingPartition ring_partition(const NetworkGeometry& geom, int rings)
{
    if (rings < 1)
        throw std::domain_error("ring_partition: need at least one ring, got " + std::to_string(rings));
    geom.validate();
    RingPartition p;
    const double width = (geom.r_out - geom.r_in) / rings;
    p.boundaries.resize(static_cast<std::size_t>(rings) + 1);
    for (int k = 0; k <= rings; ++k)
        p.boundaries[static_cast<std::size_t>(k)] = geom.r_in + k * width;
    p.boundaries.back() = geom.r_out;
    for (int k = 0; k < rings; ++k) {
        const double mid = 0.5 * (p.boundaries[static_cast<std::size_t>(k)] + p.boundaries[static_cast<std::size_t>(k) + 1]);
        p.blockage.push_back(blockage_probability(mid, geom));
    }
    return p;
}

double log_q_function(int t, double alpha, double m, double x, double s, double eta0)
{
    if (t < 0)
        throw std::domain_error("q_function: t must be nonnegative");
    if (!(alpha > 0.0) || !(m > 0.0) || !(eta0 > 0.0))
        throw std::domain_error("q_function: alpha, m and eta0 must be positive");
    if (!(x > 0.0))
        throw std::domain_error("q_function: x must be positive");
    if (!(s > 0.0))
        throw std::domain_error("q_function: s must be positive");
    const double b = m + 2.0 / alpha;
    const double z = -m / (x * s * eta0);
    return log_gauss_2f1(m + t, b, b + 1.0, z) - m * std::log(x) - std::log(b);
}

double q_function(int t, double alpha, double m, double x, double s, double eta0)
{
    return std::exp(log_q_function(t, alpha, m, x, s, eta0));
}

std::vector<double> log_expected_interferer_factors(const RingPartition& partition, const Scenario& scenario,
                                                    double s, double eta0, int max_t)
{
    if (max_t < 0)
        throw std::domain_error("expected interferer factor: t must be nonnegative");
    if (!(s >= 0.0))
        throw std::domain_error("expected interferer factor: threshold must be nonnegative");
    if (!(eta0 > 0.0))
        throw std::domain_error("expected interferer factor: eta0 must be positive");
    const auto& geom = scenario.geometry;
    const auto& ch = scenario.channel;
    partition.validate(geom);

    std::vector<double> out(static_cast<std::size_t>(max_t) + 1, kNegInf);
    if (s == 0.0) {
        out[0] = 0.0;
        return out;
    }

    const std::size_t rings = partition.blockage.size();
    std::vector<std::array<double, kMmWaveStates>> probs(rings);
    for (std::size_t k = 0; k < rings; ++k)
        probs[k] = state_probabilities(partition.blockage[k], ch, scenario.tx);

    const double main_weight = scenario.rx.beamwidth / kTwoPi;
    const std::array<std::pair<double, double>, 2> lobes{
        {{scenario.rx.main_gain, main_weight}, {scenario.rx.side_gain, 1.0 - main_weight}}};
    const double log_s_eta0 = std::log(s) + std::log(eta0);
    const double log_area = std::log(geom.area());

    std::vector<LogSumExp> acc(out.size());
    if (1.0 - ch.p_transmit > 0.0)
        acc[0].add(std::log1p(-ch.p_transmit));

    std::vector<double> at_boundary(partition.boundaries.size());
    for (int j = 1; j < kMmWaveStates; ++j) {
        const bool blocked = state_is_blocked(j);
        const double m = blocked ? ch.m_nlos : static_cast<double>(ch.m_los);
        const double alpha = blocked ? ch.alpha_nlos : ch.alpha_los;
        const double tx_gain = state_points_towards(j) ? scenario.tx.main_gain : scenario.tx.side_gain;
        const auto ring_prob = [&](std::size_t k) { return probs[k][static_cast<std::size_t>(j)]; };

        bool any = false;
        for (std::size_t k = 0; k < rings; ++k)
            any = any || ring_prob(k) > 0.0;
        if (!any)
            continue;

        for (const auto& [rx_gain, weight] : lobes) {
            if (weight <= 0.0)
                continue;
            const double log_gain = std::log(rx_gain * tx_gain);
            for (int t = 0; t <= max_t; ++t) {
                const double log_coef = log_gamma(t + m) - log_gamma(m) - log_gamma(t + 1.0);
                const double log_prefix = std::log(kTwoPi / alpha) - log_area + log_coef + std::log(weight);
                for (std::size_t k = 0; k < at_boundary.size(); ++k) {
                    const bool needed = (k > 0 && ring_prob(k - 1) > 0.0) || (k < rings && ring_prob(k) > 0.0);
                    at_boundary[k] = needed ? log_ring_integral(t, alpha, m, log_gain, log_s_eta0, partition.boundaries[k])
                                            : kNegInf;
                }
                for (std::size_t k = 0; k < rings; ++k) {
                    if (!(ring_prob(k) > 0.0))
                        continue;
                    const double hi = at_boundary[k + 1];
                    const double lo = at_boundary[k];
                    if (!(hi > lo))
                        continue;
                    const double log_diff = hi + std::log(-std::expm1(lo - hi));
                    acc[static_cast<std::size_t>(t)].add(std::log(ring_prob(k)) + log_prefix + log_diff);
                }
            }
        }
    }
    for (std::size_t t = 0; t < out.size(); ++t)
        out[t] = acc[t].value();
    return out;
}

double expected_interferer_factor(int t, const RingPartition& partition, const Scenario& scenario, double s,
                                  double eta0)
{
    return std::exp(log_expected_interferer_factors(partition, scenario, s, eta0, t)[static_cast<std::size_t>(t)]);
}

namespace {

double spatial_outage_cached(double s, const Scenario& scenario, const RingPartition& partition,
                             const ReferenceLink& ref, const CompositionSums& cache)
{
    if (!(s >= 0.0))
        throw std::domain_error("spatially_averaged_outage: threshold must be nonnegative");
    if (s == 0.0)
        return 0.0;
    if (std::isinf(s))
        return 1.0;
    const auto table = log_expected_interferer_factors(partition, scenario, s, ref.rate, ref.shape - 1);
    const std::vector<std::vector<double>> log_factors(static_cast<std::size_t>(scenario.num_interferers), table);
    return outage_from_composition_sums(cache.evaluate(log_factors), ref.rate * s * ref.noise);
}

} // namespace

double spatially_averaged_outage(double s, const Scenario& scenario, const RingPartition& partition)
{
    scenario.validate();
    const auto ref = scenario.reference();
    const CompositionSums cache(scenario.num_interferers, ref.shape - 1);
    return spatial_outage_cached(s, scenario, partition, ref, cache);
}

double spatially_averaged_outage(double s, const Scenario& scenario, int rings)
{
    return spatially_averaged_outage(s, scenario, ring_partition(scenario.geometry, rings));
}

OutageCurve spatial_outage_curve(const std::vector<double>& thresholds, const Scenario& scenario,
                                 const RingPartition& partition)
{
    check_thresholds(thresholds);
    scenario.validate();
    OutageCurve curve;
    curve.method = CurveMethod::analytic_spatial;
    if (thresholds.empty())
        return curve;
    const auto ref = scenario.reference();
    const CompositionSums cache(scenario.num_interferers, ref.shape - 1);
    for (double s : thresholds)
        curve.points.push_back({s, spatial_outage_cached(s, scenario, partition, ref, cache), 0.0});
    enforce_monotone(curve.points);
    return curve;
}

OutageCurve spatial_outage_curve(const std::vector<double>& thresholds, const Scenario& scenario, int rings)
{
    return spatial_outage_curve(thresholds, scenario, ring_partition(scenario.geometry, rings));
}

} // namespace mmoutage
