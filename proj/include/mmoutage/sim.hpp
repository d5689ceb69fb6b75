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
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "mmoutage/conditional.hpp"
#include "mmoutage/model.hpp"

namespace mmoutage {

inline constexpr const char* kRngAlgorithm = "xoshiro256**";
inline constexpr const char* kGammaAlgorithm = "marsaglia-tsang";

/// Draws per independent substream. Fixed so results do not depend on the
/// number of workers.
inline constexpr std::uint64_t kSimBatch = 4096;

/// xoshiro256** seeded through splitmix64. Satisfies
/// UniformRandomBitGenerator.
class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(std::uint64_t seed);
    /// Raw state; must not be all zero.
    explicit Xoshiro256(const std::array<std::uint64_t, 4>& state);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    /// Advances 2^128 draws.
    void jump();

    /// (x >> 11) 2^-53, in [0, 1).
    double uniform();
    /// Midpoint variant in (0, 1).
    double uniform_open();

    const std::array<std::uint64_t, 4>& state() const { return s_; }

private:
    std::array<std::uint64_t, 4> s_;
};

/// Marsaglia polar method; the second variate is discarded.
double standard_normal(Xoshiro256& rng);

/// Gamma(shape, rate) with mean shape / rate. Marsaglia-Tsang rejection
/// without squeeze; shape < 1 is boosted through U^(1 / shape).
double sample_gamma(double shape, double rate, Xoshiro256& rng);

struct SimConfig {
    std::uint64_t num_power_draws = 10000;
    std::uint64_t num_network_draws = 100;
    std::uint64_t seed = 1;
    std::string rng_algorithm = kRngAlgorithm;
    unsigned jobs = 1; ///< worker threads; never changes results

    void validate() const;
};

/// K interferers uniform on the annulus (radius CDF
/// (r^2 - r_in^2) / (r_out^2 - r_in^2), angle uniform on [0, 2 pi)).
/// Boresight points at the reference transmitter, placed at angle 0.
NetworkRealization draw_realization(const NetworkGeometry& geom, int k, Xoshiro256& rng, double ref_distance = 1.0);

/// Empirical P[SINR <= beta] from num_power_draws samples of
/// Y0 / (c + sum_i Y_i), with binomial standard errors.
OutageCurve simulate_conditional(const std::vector<double>& thresholds, const StateMixture& mixture,
                                 const ReferenceLink& ref, const SimConfig& sim);

OutageCurve simulate_conditional(const std::vector<double>& thresholds, const NetworkRealization& realization,
                                 const Scenario& scenario, const SimConfig& sim);

/// Mean of the analytic conditional outage over num_network_draws random
/// realizations; standard errors are across realizations.
OutageCurve simulate_spatial(const std::vector<double>& thresholds, const Scenario& scenario, const SimConfig& sim);

} // namespace mmoutage
