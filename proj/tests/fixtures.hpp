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

// Shared fixtures for the test programs.

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "mmoutage/model.hpp"

namespace fixture {

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline mmoutage::NetworkGeometry example_geometry()
{
    mmoutage::NetworkGeometry g;
    g.r_in = 1.0;
    g.r_out = 6.0;
    g.num_blockages = 20;
    g.blockage_width = 1.0;
    return g;
}

inline mmoutage::ChannelParams example_channel(double snr_db = 20.0)
{
    mmoutage::ChannelParams ch;
    ch.m_los = 4;
    ch.m_nlos = 1.0;
    ch.alpha_los = 2.0;
    ch.alpha_nlos = 4.0;
    ch.p_transmit = 0.5;
    ch.snr = std::pow(10.0, snr_db / 10.0);
    return ch;
}

inline mmoutage::AntennaPattern example_antenna()
{
    return mmoutage::AntennaPattern::from_elements(4);
}

// K interferers uniform on the annulus, drawn with std::mt19937_64.
inline mmoutage::NetworkRealization uniform_realization(const mmoutage::NetworkGeometry& g, int k, unsigned seed)
{
    std::mt19937_64 rng(seed);
    mmoutage::NetworkRealization net;
    net.ref_distance = 1.0;
    for (int i = 0; i < k; ++i) {
        const double u = uniform(rng, 0.0, 1.0);
        const double r = std::sqrt(g.r_in * g.r_in + u * (g.r_out * g.r_out - g.r_in * g.r_in));
        net.interferers.push_back({std::min(r, g.r_out), uniform(rng, 0.0, mmoutage::kTwoPi)});
    }
    return net;
}

inline mmoutage::Scenario example_scenario(double snr_db = 20.0, double p_transmit = 0.5)
{
    mmoutage::Scenario sc;
    sc.geometry = example_geometry();
    sc.channel = example_channel(snr_db);
    sc.channel.p_transmit = p_transmit;
    sc.tx = example_antenna();
    sc.rx = example_antenna();
    sc.num_interferers = 20;
    sc.ref_distance = 1.0;
    return sc;
}

inline std::vector<double> db_grid(double lo, double hi, int n)
{
    std::vector<double> out;
    for (int i = 0; i < n; ++i)
        out.push_back(std::pow(10.0, (lo + (hi - lo) * i / (n - 1)) / 10.0));
    return out;
}

inline mmoutage::InterfererMixture single_state(double shape, double rate, double off = 0.0)
{
    return {{off, 0.0, 0.0}, {1.0 - off, shape, rate}};
}

} // namespace fixture
