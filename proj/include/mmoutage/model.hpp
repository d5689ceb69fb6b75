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

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace mmoutage {

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Number of interferer states in the mmWave model: off, then
/// {blocked, unblocked} x {pointing towards, pointing away}.
constexpr int kMmWaveStates = 5;

/// How the probability that a blockage disk intersects a link is computed.
enum class BlockageModel {
    /// Blockage centres uniform over the annulus; the region of centres that
    /// block a link is the stadium around it intersected with the annulus.
    annulus,
    /// Unclipped stadium area W r + pi W^2 / 4 divided by the annulus area.
    stadium,
};

std::string to_string(BlockageModel model);
BlockageModel blockage_model_from_string(const std::string& name);

struct NetworkGeometry {
    double r_in = 1.0;
    double r_out = 6.0;
    int num_blockages = 0;
    double blockage_width = 1.0;
    BlockageModel blockage_model = BlockageModel::annulus;

    /// pi (r_out^2 - r_in^2)
    double area() const;
    void validate() const;
};

/// Sectorised antenna: `main_gain` inside `beamwidth` (radians), `side_gain`
/// outside.
struct AntennaPattern {
    double main_gain = 1.0;
    double side_gain = 1.0;
    double beamwidth = kTwoPi;

    /// Demo mapping from element count N to (G = N, g = 0.1, theta = 2 pi / N).
    static AntennaPattern from_elements(int elements);
    void validate() const;
};

struct ChannelParams {
    int m_los = 4;          ///< LOS Nakagami shape; also the reference link shape
    double m_nlos = 1.0;    ///< NLOS Nakagami shape
    double alpha_los = 2.0; ///< LOS path-loss exponent
    double alpha_nlos = 4.0;
    double p_transmit = 0.5; ///< Aloha transmit probability
    double snr = 100.0;      ///< linear; +inf means interference limited

    void validate() const;
};

struct Interferer {
    double distance;
    double angle;
};

struct NetworkRealization {
    std::vector<Interferer> interferers;
    double ref_distance = 1.0;
    double boresight = 0.0; ///< receiver main-lobe direction, towards the reference transmitter

    void validate(const NetworkGeometry& geom) const;
};

/// One component of an interferer's power distribution. The off state is a
/// point mass at zero and carries shape = rate = 0.
struct GammaState {
    double prob = 0.0;
    double shape = 0.0;
    double rate = 0.0;

    bool is_off() const { return shape == 0.0; }
};

/// States j = 0..J of one interferer; index 0 is the off state.
using InterfererMixture = std::vector<GammaState>;

struct StateMixture {
    std::vector<InterfererMixture> interferers;

    /// Checks probabilities sum to one (1e-12), state 0 is off and every
    /// other state has positive shape and rate.
    void validate() const;
};

/// Reference link: Y0 ~ Gamma(shape, rate) and noise constant c.
struct ReferenceLink {
    int shape;
    double rate;
    double noise;
};

/// p_b(r) as a plain function of link length.
using BlockageFunction = std::function<double(double)>;

/// Probability that a link of length r is blocked by at least one of the
/// geometry's blockages.
double blockage_probability(double r, const NetworkGeometry& geom);

/// Binds blockage_probability to a geometry.
BlockageFunction blockage_function(const NetworkGeometry& geom);

/// Area of the set of blockage centres (within the annulus when the model
/// is `annulus`) whose disk intersects a link of length r from the origin.
double blocking_region_area(double r, const NetworkGeometry& geom);

/// State probabilities (p_0, ..., p_4) for a given blockage probability.
std::array<double, kMmWaveStates> state_probabilities(double blockage, const ChannelParams& ch,
                                                      const AntennaPattern& tx);

std::array<double, kMmWaveStates> state_probabilities(double r, const NetworkGeometry& geom,
                                                      const ChannelParams& ch, const AntennaPattern& tx);

/// Receive gain towards `angle` for a main lobe centred on `boresight`.
/// Main gain iff the circular angular distance is strictly below beamwidth/2.
double receive_gain(double angle, double boresight, const AntennaPattern& rx);

bool state_is_blocked(int state);
bool state_points_towards(int state);

struct GammaParams {
    double shape;
    double rate;
};

/// Mean received power g_r g_t r^-alpha for an active state.
double mean_power(int state, double distance, double rx_gain, const ChannelParams& ch, const AntennaPattern& tx);

/// Gamma shape and rate for active state j in {1, 2, 3, 4}.
/// Throws std::invalid_argument for the off state.
GammaParams gamma_params(int state, double distance, double rx_gain, const ChannelParams& ch,
                         const AntennaPattern& tx);

/// Reference link parameters: LOS shape, rate m0 / Omega0 and noise
/// constant Omega0 / SNR, with Omega0 = G_r G_t R0^-alpha_L.
ReferenceLink reference_params(const ChannelParams& ch, const AntennaPattern& tx, const AntennaPattern& rx,
                               double ref_distance);

/// Per-interferer five-state mixtures for a fixed realization.
StateMixture build_mixture(const NetworkRealization& realization, const BlockageFunction& blockage,
                           const ChannelParams& ch, const AntennaPattern& tx, const AntennaPattern& rx);

StateMixture build_mixture(const NetworkRealization& realization, const NetworkGeometry& geom,
                           const ChannelParams& ch, const AntennaPattern& tx, const AntennaPattern& rx);

/// Everything needed to evaluate the network away from a fixed realization.
struct Scenario {
    NetworkGeometry geometry;
    ChannelParams channel;
    AntennaPattern tx;
    AntennaPattern rx;
    int num_interferers = 20;
    double ref_distance = 1.0;

    ReferenceLink reference() const { return reference_params(channel, tx, rx, ref_distance); }
    void validate() const;
};

double db_to_linear(double db);
double linear_to_db(double linear);

} // namespace mmoutage
