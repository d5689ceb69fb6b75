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

#include "mmoutage/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mmoutage {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

// Area of disk(0, radius) intersected with disk((offset, 0), w).
double lens_area(double radius, double w, double offset)
{
    if (offset >= radius + w)
        return 0.0;
    if (offset <= std::fabs(radius - w)) {
        const double small = std::min(radius, w);
        return kPi * small * small;
    }
    // Lens angles in half-angle form.
    const double f1 = -offset + radius + w;
    const double f2 = offset + radius - w;
    const double f3 = offset - radius + w;
    const double f4 = offset + radius + w;
    const double a1 = 2.0 * std::atan2(std::sqrt(std::max(0.0, f1 * f3)), std::sqrt(std::max(0.0, f2 * f4)));
    const double a2 = 2.0 * std::atan2(std::sqrt(std::max(0.0, f1 * f2)), std::sqrt(std::max(0.0, f3 * f4)));
    const double kite = f1 * f2 * f3 * f4;
    return radius * radius * a1 + w * w * a2 - 0.5 * std::sqrt(std::max(kite, 0.0));
}

// Area of the stadium {x : dist(x, [0, length] e_1) <= w} inside disk(0, radius).
// Integrated in polar coordinates: the circle of radius rho meets the
// stadium in an arc of half-angle pi (rho <= w), asin(w / rho) while the
// arc ends project inside the segment, and the end-cap lens angle beyond.
double stadium_in_disk(double length, double w, double radius)
{
    if (radius <= 0.0 || w <= 0.0)
        return 0.0;
    const double inner = std::min(radius, w);
    double area = kPi * inner * inner;
    if (length <= 0.0 || radius <= w)
        return area;

    const auto side = [w](double rho) { return rho * rho * std::asin(w / rho) + w * std::sqrt(rho * rho - w * w); };
    const double knee = std::hypot(length, w);
    area += side(std::min(radius, knee)) - side(w);
    if (radius > knee)
        area += lens_area(std::min(radius, length + w), w, length) - lens_area(knee, w, length);
    return area;
}

} // namespace

std::string to_string(BlockageModel model)
{
    switch (model) {
    case BlockageModel::annulus:
        return "annulus";
    case BlockageModel::stadium:
        return "stadium";
    }
    return "unknown";
}

BlockageModel blockage_model_from_string(const std::string& name)
{
    if (name == "annulus")
        return BlockageModel::annulus;
    if (name == "stadium")
        return BlockageModel::stadium;
    throw std::invalid_argument("unknown blockage model '" + name + "' (expected 'annulus' or 'stadium')");
}

double NetworkGeometry::area() const
{
    return kPi * (r_out * r_out - r_in * r_in);
}

void NetworkGeometry::validate() const
{
    require(r_in > 0.0, "geometry.r_in must be positive");
    require(r_out > r_in, "geometry.r_out must exceed geometry.r_in");
    require(std::isfinite(r_out), "geometry.r_out must be finite");
    require(num_blockages >= 0, "geometry.num_blockages must be nonnegative");
    require(blockage_width >= 0.0 && std::isfinite(blockage_width), "geometry.blockage_width must be nonnegative");
}

AntennaPattern AntennaPattern::from_elements(int elements)
{
    require(elements >= 1, "antenna element count must be at least 1");
    if (elements == 1)
        return {1.0, 1.0, kTwoPi};
    return {static_cast<double>(elements), 0.1, kTwoPi / elements};
}

void AntennaPattern::validate() const
{
    require(side_gain > 0.0, "antenna side_gain must be positive");
    require(main_gain >= side_gain, "antenna main_gain must be at least side_gain");
    require(std::isfinite(main_gain), "antenna main_gain must be finite");
    require(beamwidth > 0.0 && beamwidth <= kTwoPi, "antenna beamwidth must lie in (0, 2 pi]");
}

void ChannelParams::validate() const
{
    require(m_los >= 1, "channel.m_los must be a positive integer");
    require(m_nlos > 0.0 && std::isfinite(m_nlos), "channel.m_nlos must be positive");
    require(alpha_los > 0.0 && std::isfinite(alpha_los), "channel.alpha_los must be positive");
    require(alpha_nlos > 0.0 && std::isfinite(alpha_nlos), "channel.alpha_nlos must be positive");
    require(p_transmit >= 0.0 && p_transmit <= 1.0, "channel.p_transmit must lie in [0, 1]");
    require(snr > 0.0, "channel.snr must be positive");
}

void NetworkRealization::validate(const NetworkGeometry& geom) const
{
    require(ref_distance > 0.0 && std::isfinite(ref_distance), "network.ref_distance must be positive");
    require(std::isfinite(boresight), "network.boresight must be finite");
    for (const auto& it : interferers) {
        require(it.distance >= geom.r_in && it.distance <= geom.r_out,
                "interferer distance " + std::to_string(it.distance) + " outside [r_in, r_out]");
        require(it.angle >= 0.0 && it.angle < kTwoPi, "interferer angle must lie in [0, 2 pi)");
    }
}

void StateMixture::validate() const
{
    for (std::size_t i = 0; i < interferers.size(); ++i) {
        const auto& states = interferers[i];
        const std::string where = "mixture of interferer " + std::to_string(i);
        require(!states.empty() && states[0].is_off(), where + ": state 0 must be the off state");
        double total = 0.0;
        for (std::size_t j = 0; j < states.size(); ++j) {
            require(states[j].prob >= 0.0 && states[j].prob <= 1.0, where + ": probability outside [0, 1]");
            if (j > 0)
                require(states[j].shape > 0.0 && states[j].rate > 0.0 && std::isfinite(states[j].rate),
                        where + ": active states need positive shape and rate");
            total += states[j].prob;
        }
        require(std::fabs(total - 1.0) <= 1e-12, where + ": probabilities do not sum to one");
    }
}

double blocking_region_area(double r, const NetworkGeometry& geom)
{
    if (!(r >= 0.0))
        throw std::domain_error("blocking_region_area: link length must be nonnegative");
    const double w = 0.5 * geom.blockage_width;
    if (geom.blockage_model == BlockageModel::stadium)
        return geom.blockage_width * r + kPi * w * w;
    return std::max(0.0, stadium_in_disk(r, w, geom.r_out) - stadium_in_disk(r, w, geom.r_in));
}

double blockage_probability(double r, const NetworkGeometry& geom)
{
    if (!(r >= 0.0))
        throw std::domain_error("blockage_probability: link length must be nonnegative");
    if (geom.num_blockages == 0 || geom.blockage_width == 0.0)
        return 0.0;
    const double single = std::min(1.0, blocking_region_area(r, geom) / geom.area());
    if (single >= 1.0)
        return 1.0;
    // 1 - (1 - single)^B
    return -std::expm1(geom.num_blockages * std::log1p(-single));
}

BlockageFunction blockage_function(const NetworkGeometry& geom)
{
    return [geom](double r) { return blockage_probability(r, geom); };
}

std::array<double, kMmWaveStates> state_probabilities(double blockage, const ChannelParams& ch,
                                                      const AntennaPattern& tx)
{
    if (!(blockage >= 0.0 && blockage <= 1.0))
        throw std::domain_error("state_probabilities: blockage probability outside [0, 1]");
    const double towards = tx.beamwidth / kTwoPi;
    const double pt = ch.p_transmit;
    return {1.0 - pt, blockage * towards * pt, (1.0 - blockage) * towards * pt, blockage * (1.0 - towards) * pt,
            (1.0 - blockage) * (1.0 - towards) * pt};
}

std::array<double, kMmWaveStates> state_probabilities(double r, const NetworkGeometry& geom,
                                                      const ChannelParams& ch, const AntennaPattern& tx)
{
    return state_probabilities(blockage_probability(r, geom), ch, tx);
}

double receive_gain(double angle, double boresight, const AntennaPattern& rx)
{
    double d = std::fmod(std::fabs(angle - boresight), kTwoPi);
    d = std::min(d, kTwoPi - d);
    return d < 0.5 * rx.beamwidth ? rx.main_gain : rx.side_gain;
}

bool state_is_blocked(int state)
{
    return state == 1 || state == 3;
}

bool state_points_towards(int state)
{
    return state == 1 || state == 2;
}

double mean_power(int state, double distance, double rx_gain, const ChannelParams& ch, const AntennaPattern& tx)
{
    if (state < 1 || state >= kMmWaveStates)
        throw std::invalid_argument("state " + std::to_string(state) + " has no Gamma parameters");
    const double alpha = state_is_blocked(state) ? ch.alpha_nlos : ch.alpha_los;
    const double tx_gain = state_points_towards(state) ? tx.main_gain : tx.side_gain;
    return rx_gain * tx_gain * std::pow(distance, -alpha);
}

GammaParams gamma_params(int state, double distance, double rx_gain, const ChannelParams& ch,
                         const AntennaPattern& tx)
{
    const double omega = mean_power(state, distance, rx_gain, ch, tx);
    const double shape = state_is_blocked(state) ? ch.m_nlos : static_cast<double>(ch.m_los);
    return {shape, shape / omega};
}

ReferenceLink reference_params(const ChannelParams& ch, const AntennaPattern& tx, const AntennaPattern& rx,
                               double ref_distance)
{
    if (!(ref_distance > 0.0))
        throw std::domain_error("reference_params: reference distance must be positive");
    const double omega = rx.main_gain * tx.main_gain * std::pow(ref_distance, -ch.alpha_los);
    const double noise = std::isinf(ch.snr) ? 0.0 : omega / ch.snr;
    return {ch.m_los, ch.m_los / omega, noise};
}

StateMixture build_mixture(const NetworkRealization& realization, const BlockageFunction& blockage,
                           const ChannelParams& ch, const AntennaPattern& tx, const AntennaPattern& rx)
{
    ch.validate();
    tx.validate();
    rx.validate();
    StateMixture mixture;
    mixture.interferers.reserve(realization.interferers.size());
    for (const auto& it : realization.interferers) {
        if (!(it.distance > 0.0))
            throw std::domain_error("build_mixture: interferer distance must be positive");
        const auto probs = state_probabilities(blockage(it.distance), ch, tx);
        const double g_r = receive_gain(it.angle, realization.boresight, rx);
        InterfererMixture states(kMmWaveStates);
        states[0] = {probs[0], 0.0, 0.0};
        for (int j = 1; j < kMmWaveStates; ++j) {
            const auto params = gamma_params(j, it.distance, g_r, ch, tx);
            states[static_cast<std::size_t>(j)] = {probs[static_cast<std::size_t>(j)], params.shape, params.rate};
        }
        mixture.interferers.push_back(std::move(states));
    }
    return mixture;
}

StateMixture build_mixture(const NetworkRealization& realization, const NetworkGeometry& geom,
                           const ChannelParams& ch, const AntennaPattern& tx, const AntennaPattern& rx)
{
    geom.validate();
    realization.validate(geom);
    return build_mixture(realization, blockage_function(geom), ch, tx, rx);
}

void Scenario::validate() const
{
    geometry.validate();
    channel.validate();
    tx.validate();
    rx.validate();
    require(num_interferers >= 0, "network.num_interferers must be nonnegative");
    require(ref_distance > 0.0 && std::isfinite(ref_distance), "network.ref_distance must be positive");
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear)
{
    return 10.0 * std::log10(linear);
}

} // namespace mmoutage
