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

#include "mmoutage/losball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace mmoutage {

namespace {

double mean_square(const OutageCurve& a, const OutageCurve& b)
{
    if (a.points.empty())
        return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        const double d = a.points[i].outage - b.points[i].outage;
        sum += d * d;
    }
    return sum / static_cast<double>(a.points.size());
}

void check_radius(double r_los, const NetworkGeometry& geom)
{
    if (!(r_los >= geom.r_in && r_los <= geom.r_out))
        throw std::invalid_argument("R_LOS " + std::to_string(r_los) + " outside [r_in, r_out]");
}

} // namespace

std::string to_string(LosBallSelection selection)
{
    switch (selection) {
    case LosBallSelection::explicit_value:
        return "value";
    case LosBallSelection::moment_matched:
        return "moment";
    case LosBallSelection::best_fit:
        return "bestfit";
    }
    return "unknown";
}

LosBallSelection los_ball_selection_from_string(const std::string& name)
{
    for (auto s : {LosBallSelection::explicit_value, LosBallSelection::moment_matched, LosBallSelection::best_fit})
        if (to_string(s) == name)
            return s;
    throw std::invalid_argument("unknown R_LOS selection '" + name + "' (expected value, moment or bestfit)");
}

void LosBallConfig::validate(const NetworkGeometry& geom) const
{
    if (selection == LosBallSelection::explicit_value)
        check_radius(radius, geom);
}

double r_los_moment_match(const NetworkGeometry& geom)
{
    geom.validate();
    const auto los_density = [&](double r) { return (1.0 - blockage_probability(r, geom)) * kTwoPi * r; };
    const double los_area = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(los_density, geom.r_in,
                                                                                         geom.r_out, 20, 1e-13);
    if (!(los_area >= -1e-9 * geom.area() && los_area <= geom.area() * (1.0 + 1e-9)))
        throw std::runtime_error("r_los_moment_match: expected LOS area outside the annulus area");
    const double r2 = geom.r_in * geom.r_in + std::max(0.0, los_area) / std::numbers::pi;
    return std::clamp(std::sqrt(r2), geom.r_in, geom.r_out);
}

BlockageFunction los_ball_blockage(double r_los)
{
    return [r_los](double r) { return r > r_los ? 1.0 : 0.0; };
}

StateMixture losball_mixture(const NetworkRealization& realization, double r_los, const Scenario& scenario)
{
    scenario.geometry.validate();
    check_radius(r_los, scenario.geometry);
    realization.validate(scenario.geometry);
    return build_mixture(realization, los_ball_blockage(r_los), scenario.channel, scenario.tx, scenario.rx);
}

double losball_conditional_outage(double s, const NetworkRealization& realization, double r_los,
                                  const Scenario& scenario)
{
    const auto ref = reference_params(scenario.channel, scenario.tx, scenario.rx, realization.ref_distance);
    return conditional_outage(s, losball_mixture(realization, r_los, scenario), ref);
}

OutageCurve losball_conditional_curve(const std::vector<double>& thresholds, const NetworkRealization& realization,
                                      double r_los, const Scenario& scenario)
{
    const auto ref = reference_params(scenario.channel, scenario.tx, scenario.rx, realization.ref_distance);
    auto curve = conditional_outage_curve(thresholds, losball_mixture(realization, r_los, scenario), ref);
    curve.method = CurveMethod::los_ball;
    return curve;
}

RingPartition losball_partition(const NetworkGeometry& geom, int rings, double r_los)
{
    check_radius(r_los, geom);
    const auto base = ring_partition(geom, rings);
    RingPartition p;
    const double merge = 1e-12 * geom.r_out;
    for (std::size_t k = 0; k < base.boundaries.size(); ++k) {
        const double b = base.boundaries[k];
        if (!p.boundaries.empty() && p.boundaries.back() < r_los - merge && b > r_los + merge)
            p.boundaries.push_back(r_los);
        p.boundaries.push_back(b);
    }
    for (std::size_t k = 0; k + 1 < p.boundaries.size(); ++k) {
        const double mid = 0.5 * (p.boundaries[k] + p.boundaries[k + 1]);
        p.blockage.push_back(mid > r_los ? 1.0 : 0.0);
    }
    return p;
}

double losball_spatial_outage(double s, double r_los, const Scenario& scenario, int rings)
{
    return spatially_averaged_outage(s, scenario, losball_partition(scenario.geometry, rings, r_los));
}

OutageCurve losball_spatial_curve(const std::vector<double>& thresholds, double r_los, const Scenario& scenario,
                                  int rings)
{
    auto curve = spatial_outage_curve(thresholds, scenario, losball_partition(scenario.geometry, rings, r_los));
    curve.method = CurveMethod::los_ball;
    return curve;
}

BestFit best_fit_r_los_conditional(const std::vector<double>& thresholds, const NetworkRealization& realization,
                                   const Scenario& scenario)
{
    const auto& geom = scenario.geometry;
    const auto exact = conditional_outage_curve(
        thresholds, build_mixture(realization, geom, scenario.channel, scenario.tx, scenario.rx),
        reference_params(scenario.channel, scenario.tx, scenario.rx, realization.ref_distance));

    std::vector<double> cuts{geom.r_in, geom.r_out};
    for (const auto& it : realization.interferers)
        cuts.push_back(it.distance);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    BestFit best{geom.r_in, std::numeric_limits<double>::infinity()};
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double r = 0.5 * (cuts[k] + cuts[k + 1]);
        const double mse = mean_square(losball_conditional_curve(thresholds, realization, r, scenario), exact);
        if (mse < best.mse)
            best = {r, mse};
    }
    return best;
}

BestFit best_fit_r_los_spatial(const std::vector<double>& thresholds, const Scenario& scenario, int rings,
                               double tolerance)
{
    if (!(tolerance > 0.0))
        throw std::invalid_argument("best_fit_r_los_spatial: tolerance must be positive");
    const auto& geom = scenario.geometry;
    const auto exact = spatial_outage_curve(thresholds, scenario, rings);
    const auto error = [&](double r) {
        return mean_square(losball_spatial_curve(thresholds, r, scenario, rings), exact);
    };

    constexpr int kScan = 24;
    const double step = (geom.r_out - geom.r_in) / kScan;
    int best_index = 0;
    double best_error = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kScan; ++i) {
        const double e = error(geom.r_in + i * step);
        if (e < best_error) {
            best_error = e;
            best_index = i;
        }
    }

    double lo = geom.r_in + std::max(0, best_index - 1) * step;
    double hi = geom.r_in + std::min(kScan, best_index + 1) * step;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - ratio * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = error(x1);
    double f2 = error(x2);
    while (hi - lo > tolerance) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = error(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = error(x2);
        }
    }
    BestFit best{0.5 * (lo + hi), 0.0};
    best.mse = error(best.radius);
    if (best_error < best.mse)
        best = {geom.r_in + best_index * step, best_error};
    return best;
}

} // namespace mmoutage
