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

#include "mmoutage/conditional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mmoutage/specialfn.hpp"

namespace mmoutage {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::uint64_t kMaxCachedCompositions = 50'000'000;

// exp(-x) sum_{k < n} x^k / k!
double poisson_head(int n, double x)
{
    if (x == 0.0)
        return 1.0;
    if (std::isinf(x))
        return 0.0;
    const double log_x = std::log(x);
    CompensatedSum sum;
    double log_fact = 0.0;
    for (int k = 0; k < n; ++k) {
        if (k > 0)
            log_fact += std::log(static_cast<double>(k));
        sum += std::exp(-x + k * log_x - log_fact);
    }
    return sum.value();
}

} // namespace

std::string to_string(CurveMethod method)
{
    switch (method) {
    case CurveMethod::analytic_conditional:
        return "analytic-conditional";
    case CurveMethod::analytic_spatial:
        return "analytic-spatial";
    case CurveMethod::monte_carlo:
        return "monte-carlo";
    case CurveMethod::los_ball:
        return "los-ball";
    }
    return "unknown";
}

CurveMethod curve_method_from_string(const std::string& name)
{
    for (auto m : {CurveMethod::analytic_conditional, CurveMethod::analytic_spatial, CurveMethod::monte_carlo,
                   CurveMethod::los_ball})
        if (to_string(m) == name)
            return m;
    throw std::invalid_argument("unknown curve method '" + name + "'");
}

bool OutageCurve::is_valid() const
{
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        if (!(p.outage >= 0.0 && p.outage <= 1.0))
            return false;
        if (i > 0 && (p.threshold < points[i - 1].threshold || p.outage < points[i - 1].outage))
            return false;
    }
    return true;
}

double clamp_probability(double v, const char* where)
{
    if (!(v >= -1e-9 && v <= 1.0 + 1e-9))
        throw NumericalError(std::string(where) + ": probability " + std::to_string(v) + " outside [0, 1]");
    return std::clamp(v, 0.0, 1.0);
}

CompositionSums::CompositionSums(int parts, int max_total) : parts_(parts), max_total_(max_total)
{
    if (parts < 0)
        throw std::domain_error("CompositionSums: negative number of parts");
    if (max_total < 0)
        throw std::domain_error("CompositionSums: negative maximum total");
    if (max_total > std::numeric_limits<std::uint16_t>::max())
        throw std::domain_error("CompositionSums: maximum total too large");

    std::uint64_t total = 0;
    for (int t = 0; t <= max_total && parts > 0; ++t)
        total += composition_count(t, parts);
    if (total > kMaxCachedCompositions)
        throw std::length_error("CompositionSums: " + std::to_string(total) + " compositions exceed the supported size");

    levels_.resize(static_cast<std::size_t>(max_total) + 1);
    if (parts == 0) {
        levels_[0].offsets = {0, 0};
        for (int t = 1; t <= max_total; ++t)
            levels_[static_cast<std::size_t>(t)].offsets = {0};
        return;
    }
    for (int t = 0; t <= max_total; ++t) {
        auto& level = levels_[static_cast<std::size_t>(t)];
        level.offsets.reserve(composition_count(t, parts) + 1);
        level.offsets.push_back(0);
        for (const auto& c : Compositions(t, parts)) {
            for (int i = 0; i < parts; ++i) {
                if (c[static_cast<std::size_t>(i)] != 0) {
                    level.index.push_back(static_cast<std::uint32_t>(i));
                    level.value.push_back(static_cast<std::uint16_t>(c[static_cast<std::size_t>(i)]));
                }
            }
            level.offsets.push_back(static_cast<std::uint32_t>(level.index.size()));
        }
    }
}

std::uint64_t CompositionSums::size() const
{
    std::uint64_t n = 0;
    for (const auto& level : levels_)
        n += level.offsets.size() - 1;
    return n;
}

std::vector<double> CompositionSums::evaluate(const std::vector<std::vector<double>>& log_factors) const
{
    if (log_factors.size() != static_cast<std::size_t>(parts_))
        throw std::invalid_argument("CompositionSums::evaluate: expected one factor table per part");
    const std::size_t width = static_cast<std::size_t>(max_total_) + 1;

    // Products are formed as exp(base + sum over nonzero parts of delta).
    // Parts whose zero-index factor vanishes must appear among the nonzero parts.
    double base = 0.0;
    std::size_t vanishing = 0;
    std::vector<double> delta(static_cast<std::size_t>(parts_) * width);
    std::vector<char> must_hit(static_cast<std::size_t>(parts_), 0);
    for (std::size_t i = 0; i < log_factors.size(); ++i) {
        const auto& f = log_factors[i];
        if (f.size() < width)
            throw std::invalid_argument("CompositionSums::evaluate: factor table too short");
        if (std::isnan(f[0]) || f[0] == std::numeric_limits<double>::infinity())
            throw NumericalError("CompositionSums::evaluate: invalid log factor");
        const bool zero = f[0] == kNegInf;
        if (zero) {
            must_hit[i] = 1;
            ++vanishing;
        } else {
            base += f[0];
        }
        for (std::size_t t = 0; t < width; ++t)
            delta[i * width + t] = zero ? f[t] : f[t] - f[0];
    }

    std::vector<double> sums(width, 0.0);
    for (std::size_t t = 0; t < width; ++t) {
        const auto& level = levels_[t];
        CompensatedSum s;
        const std::size_t count = level.offsets.size() - 1;
        for (std::size_t c = 0; c < count; ++c) {
            double acc = base;
            std::size_t hits = 0;
            for (std::uint32_t e = level.offsets[c]; e < level.offsets[c + 1]; ++e) {
                const std::size_t i = level.index[e];
                acc += delta[i * width + level.value[e]];
                hits += static_cast<std::size_t>(must_hit[i]);
            }
            if (hits == vanishing)
                s += std::exp(acc);
        }
        sums[t] = s.value();
    }
    return sums;
}

double outage_from_composition_sums(const std::vector<double>& sums, double x)
{
    const int m0 = static_cast<int>(sums.size());
    CompensatedSum f;
    f += 1.0;
    for (int t = 0; t < m0; ++t)
        f += -sums[static_cast<std::size_t>(t)] * poisson_head(m0 - t, x);
    return clamp_probability(f.value(), "outage");
}

std::vector<double> log_interferer_factors(const InterfererMixture& states, double eta0_s, int max_t)
{
    std::vector<LogSumExp> acc(static_cast<std::size_t>(max_t) + 1);
    if (!states.empty() && states[0].prob > 0.0)
        acc[0].add(std::log(states[0].prob));
    for (std::size_t j = 1; j < states.size(); ++j) {
        const auto& st = states[j];
        if (st.prob <= 0.0)
            continue;
        const double m = st.shape;
        const double log_one_minus_u = -std::log1p(eta0_s / st.rate);
        const double log_u = eta0_s > 0.0 ? -std::log1p(st.rate / eta0_s) : kNegInf;
        double log_coef = 0.0; // ln Gamma(t + m) / (Gamma(m) t!)
        for (int t = 0; t <= max_t; ++t) {
            if (t > 0)
                log_coef += std::log((t - 1 + m) / t);
            const double power = t == 0 ? 0.0 : t * log_u;
            acc[static_cast<std::size_t>(t)].add(std::log(st.prob) + log_coef + m * log_one_minus_u + power);
        }
    }
    std::vector<double> out(acc.size());
    for (std::size_t t = 0; t < acc.size(); ++t)
        out[t] = acc[t].value();
    return out;
}

double conditional_outage(double s, const StateMixture& mixture, const ReferenceLink& ref,
                          const CompositionSums& cache)
{
    if (!(s >= 0.0))
        throw std::domain_error("conditional_outage: threshold must be nonnegative");
    if (ref.shape < 1)
        throw std::domain_error("conditional_outage: reference shape must be a positive integer");
    if (!(ref.rate > 0.0) || !(ref.noise >= 0.0))
        throw std::domain_error("conditional_outage: reference rate must be positive and noise nonnegative");
    if (cache.parts() != static_cast<int>(mixture.interferers.size()) || cache.max_total() != ref.shape - 1)
        throw std::invalid_argument("conditional_outage: composition cache does not match the mixture");
    mixture.validate();
    if (s == 0.0)
        return 0.0;
    if (std::isinf(s))
        return 1.0;

    const double eta0_s = ref.rate * s;
    std::vector<std::vector<double>> log_factors;
    log_factors.reserve(mixture.interferers.size());
    for (const auto& states : mixture.interferers)
        log_factors.push_back(log_interferer_factors(states, eta0_s, ref.shape - 1));
    return outage_from_composition_sums(cache.evaluate(log_factors), eta0_s * ref.noise);
}

double conditional_outage(double s, const StateMixture& mixture, const ReferenceLink& ref)
{
    if (ref.shape < 1)
        throw std::domain_error("conditional_outage: reference shape must be a positive integer");
    const CompositionSums cache(static_cast<int>(mixture.interferers.size()), ref.shape - 1);
    return conditional_outage(s, mixture, ref, cache);
}

double conditional_outage(double s, const StateMixture& mixture, int m0, double eta0, double noise)
{
    return conditional_outage(s, mixture, ReferenceLink{m0, eta0, noise});
}

void check_thresholds(const std::vector<double>& thresholds)
{
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        if (!(thresholds[i] >= 0.0) || std::isnan(thresholds[i]))
            throw std::invalid_argument("thresholds must be nonnegative");
        if (i > 0 && thresholds[i] < thresholds[i - 1])
            throw std::invalid_argument("thresholds must be sorted ascending");
    }
}

void enforce_monotone(std::vector<OutagePoint>& points)
{
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double drop = points[i - 1].outage - points[i].outage;
        if (drop > 1e-12)
            throw NumericalError("outage curve decreases by " + std::to_string(drop) + " at threshold "
                                 + std::to_string(points[i].threshold));
        if (drop > 0.0)
            points[i].outage = points[i - 1].outage;
    }
}

OutageCurve conditional_outage_curve(const std::vector<double>& thresholds, const StateMixture& mixture,
                                     const ReferenceLink& ref)
{
    check_thresholds(thresholds);
    OutageCurve curve;
    curve.method = CurveMethod::analytic_conditional;
    if (thresholds.empty())
        return curve;
    if (ref.shape < 1)
        throw std::domain_error("conditional_outage: reference shape must be a positive integer");
    const CompositionSums cache(static_cast<int>(mixture.interferers.size()), ref.shape - 1);
    curve.points.reserve(thresholds.size());
    for (double s : thresholds)
        curve.points.push_back({s, conditional_outage(s, mixture, ref, cache), 0.0});
    enforce_monotone(curve.points);
    return curve;
}

} // namespace mmoutage
