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


#include "mmoutage/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>

namespace mmoutage {

namespace {

std::uint64_t splitmix64(std::uint64_t& x)
{
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Runs task(b, rng) for every batch b < batches. Batch b owns the stream
// jumped b times from the seed, whichever worker runs it.
void for_each_batch(std::uint64_t batches, std::uint64_t seed, unsigned jobs,
                    const std::function<void(std::uint64_t, Xoshiro256&)>& task)
{
    const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, batches));
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](std::uint64_t w) {
        try {
            Xoshiro256 stream(seed);
            for (std::uint64_t j = 0; j < w; ++j)
                stream.jump();
            for (std::uint64_t b = w; b < batches; b += workers) {
                Xoshiro256 rng = stream;
                task(b, rng);
                for (std::uint64_t j = 0; j < workers; ++j)
                    stream.jump();
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::uint64_t w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

std::string sampler_id()
{
    return std::string(kRngAlgorithm) + "/" + kGammaAlgorithm;
}

} // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed)
{
    for (auto& w : s_)
        w = splitmix64(seed);
}

Xoshiro256::Xoshiro256(const std::array<std::uint64_t, 4>& state) : s_(state)
{
    if (s_ == std::array<std::uint64_t, 4>{})
        throw std::invalid_argument("Xoshiro256: all-zero state");
}

Xoshiro256::result_type Xoshiro256::operator()()
{
    const std::uint64_t out = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return out;
}

void Xoshiro256::jump()
{
    static constexpr std::uint64_t kJump[] = {0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL, 0xa9582618e03fc9aaULL,
                                              0x39abdc4529b1661cULL};
    std::array<std::uint64_t, 4> acc{};
    for (std::uint64_t word : kJump) {
        for (int bit = 0; bit < 64; ++bit) {
            if (word & (std::uint64_t{1} << bit))
                for (int i = 0; i < 4; ++i)
                    acc[i] ^= s_[i];
            (*this)();
        }
    }
    s_ = acc;
}

double Xoshiro256::uniform()
{
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double Xoshiro256::uniform_open()
{
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double standard_normal(Xoshiro256& rng)
{
    for (;;) {
        const double u = 2.0 * rng.uniform() - 1.0;
        const double v = 2.0 * rng.uniform() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0)
            return u * std::sqrt(-2.0 * std::log(s) / s);
    }
}

double sample_gamma(double shape, double rate, Xoshiro256& rng)
{
    if (!(shape > 0.0) || !(rate > 0.0) || !std::isfinite(shape) || !std::isfinite(rate))
        throw std::invalid_argument("sample_gamma: shape and rate must be positive");
    if (shape < 1.0) {
        const double boost = std::pow(rng.uniform_open(), 1.0 / shape);
        return sample_gamma(shape + 1.0, rate, rng) * boost;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        const double x = standard_normal(rng);
        double v = 1.0 + c * x;
        if (v <= 0.0)
            continue;
        v = v * v * v;
        const double u = rng.uniform_open();
        if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v))
            return d * v / rate;
    }
}

void SimConfig::validate() const
{
    if (num_power_draws < 1)
        throw std::invalid_argument("simulation.num_power_draws must be >= 1");
    if (num_network_draws < 1)
        throw std::invalid_argument("simulation.num_network_draws must be >= 1");
    if (rng_algorithm != kRngAlgorithm)
        throw std::invalid_argument("simulation.rng_algorithm: only \"" + std::string(kRngAlgorithm) +
                                    "\" is supported, got \"" + rng_algorithm + "\"");
    if (jobs < 1)
        throw std::invalid_argument("jobs must be >= 1");
}

NetworkRealization draw_realization(const NetworkGeometry& geom, int k, Xoshiro256& rng, double ref_distance)
{
    if (k < 0)
        throw std::invalid_argument("draw_realization: K must be >= 0");
    const double a = geom.r_in * geom.r_in;
    const double span = geom.r_out * geom.r_out - a;
    NetworkRealization net;
    net.ref_distance = ref_distance;
    net.boresight = 0.0;
    net.interferers.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const double r = std::min(std::sqrt(a + rng.uniform() * span), geom.r_out);
        const double phi = kTwoPi * rng.uniform();
        net.interferers.push_back({r, phi < kTwoPi ? phi : 0.0});
    }
    return net;
}

OutageCurve simulate_conditional(const std::vector<double>& thresholds, const StateMixture& mixture,
                                 const ReferenceLink& ref, const SimConfig& sim)
{
    check_thresholds(thresholds);
    sim.validate();
    mixture.validate();

    // cumulative state probabilities per interferer
    std::vector<std::vector<double>> cdf;
    for (const auto& states : mixture.interferers) {
        std::vector<double> c;
        double acc = 0.0;
        for (const auto& st : states)
            c.push_back(acc += st.prob);
        cdf.push_back(std::move(c));
    }

    const std::size_t n = thresholds.size();
    const std::uint64_t batches = (sim.num_power_draws + kSimBatch - 1) / kSimBatch;
    std::vector<std::vector<std::uint64_t>> hist(batches, std::vector<std::uint64_t>(n + 1, 0));

    for_each_batch(batches, sim.seed, sim.jobs, [&](std::uint64_t b, Xoshiro256& rng) {
        const std::uint64_t draws = std::min(kSimBatch, sim.num_power_draws - b * kSimBatch);
        auto& h = hist[b];
        for (std::uint64_t d = 0; d < draws; ++d) {
            const double y0 = sample_gamma(ref.shape, ref.rate, rng);
            double interference = 0.0;
            for (std::size_t i = 0; i < cdf.size(); ++i) {
                const double u = rng.uniform();
                const auto& c = cdf[i];
                std::size_t j = static_cast<std::size_t>(std::upper_bound(c.begin(), c.end(), u) - c.begin());
                if (j >= c.size())
                    j = c.size() - 1;
                const auto& st = mixture.interferers[i][j];
                if (!st.is_off())
                    interference += sample_gamma(st.shape, st.rate, rng);
            }
            const double sinr = y0 / (ref.noise + interference);
            ++h[static_cast<std::size_t>(std::lower_bound(thresholds.begin(), thresholds.end(), sinr) -
                                         thresholds.begin())];
        }
    });

    std::vector<std::uint64_t> below(n, 0);
    for (const auto& h : hist) {
        std::uint64_t run = 0;
        for (std::size_t i = 0; i < n; ++i)
            below[i] += (run += h[i]);
    }

    OutageCurve curve;
    curve.method = CurveMethod::monte_carlo;
    curve.seed = sim.seed;
    curve.sampler = sampler_id();
    const double total = static_cast<double>(sim.num_power_draws);
    for (std::size_t i = 0; i < n; ++i) {
        const double p = static_cast<double>(below[i]) / total;
        curve.points.push_back({thresholds[i], p, std::sqrt(p * (1.0 - p) / total)});
    }
    return curve;
}

OutageCurve simulate_conditional(const std::vector<double>& thresholds, const NetworkRealization& realization,
                                 const Scenario& scenario, const SimConfig& sim)
{
    scenario.validate();
    realization.validate(scenario.geometry);
    const auto mixture = build_mixture(realization, scenario.geometry, scenario.channel, scenario.tx, scenario.rx);
    return simulate_conditional(thresholds, mixture, scenario.reference(), sim);
}

OutageCurve simulate_spatial(const std::vector<double>& thresholds, const Scenario& scenario, const SimConfig& sim)
{
    check_thresholds(thresholds);
    sim.validate();
    scenario.validate();
    const auto ref = scenario.reference();
    const std::size_t n = thresholds.size();
    const std::uint64_t draws = sim.num_network_draws;
    std::vector<std::vector<double>> curves(draws);

    for_each_batch(draws, sim.seed, sim.jobs, [&](std::uint64_t b, Xoshiro256& rng) {
        const auto net = draw_realization(scenario.geometry, scenario.num_interferers, rng, scenario.ref_distance);
        const auto mix = build_mixture(net, scenario.geometry, scenario.channel, scenario.tx, scenario.rx);
        const auto c = conditional_outage_curve(thresholds, mix, ref);
        curves[b].reserve(n);
        for (const auto& p : c.points)
            curves[b].push_back(p.outage);
    });

    OutageCurve curve;
    curve.method = CurveMethod::monte_carlo;
    curve.seed = sim.seed;
    curve.sampler = sampler_id();
    for (std::size_t i = 0; i < n; ++i) {
        double mean = 0.0;
        for (const auto& c : curves)
            mean += c[i];
        mean /= static_cast<double>(draws);
        double var = 0.0;
        for (const auto& c : curves)
            var += (c[i] - mean) * (c[i] - mean);
        const double se = draws > 1 ? std::sqrt(var / static_cast<double>(draws - 1) / static_cast<double>(draws)) : 0.0;
        curve.points.push_back({thresholds[i], std::clamp(mean, 0.0, 1.0), se});
    }
    enforce_monotone(curve.points);
    return curve;
}

} // namespace mmoutage
