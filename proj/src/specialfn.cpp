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

#include "mmoutage/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

extern "C" {
#include <quadmath.h>
}

namespace mmoutage {

double log_gamma(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive, got " + std::to_string(x));
    if (std::isinf(x))
        return x;
    return boost::math::lgamma(x);
}

double erlang_cdf(double x, int shape, double rate)
{
    if (shape < 1)
        throw std::domain_error("erlang_cdf: shape must be a positive integer");
    if (!(rate > 0.0))
        throw std::domain_error("erlang_cdf: rate must be positive");
    if (!(x >= 0.0))
        throw std::domain_error("erlang_cdf: argument must be nonnegative");

    const double y = rate * x;
    if (y == 0.0)
        return 0.0;
    if (std::isinf(y))
        return 1.0;

    const double log_y = std::log(y);
    if (y < shape) {
        // Lower tail directly: exp(-y) sum_{k >= shape} y^k / k!
        CompensatedSum tail;
        double term = std::exp(-y + shape * log_y - log_gamma(shape + 1.0));
        for (int k = shape; term > 0.0; ++k) {
            tail += term;
            if (term < 1e-17 * tail.value())
                break;
            term *= y / (k + 1);
        }
        return std::min(1.0, tail.value());
    }

    CompensatedSum head;
    for (int k = 0; k < shape; ++k)
        head += std::exp(-y + k * log_y - log_gamma(k + 1.0));
    return std::clamp(1.0 - head.value(), 0.0, 1.0);
}

namespace {

constexpr int kMaxSeriesTerms = 100000;
constexpr int kMaxContinuationSteps = 4096;

using quad = __float128;

inline double r_abs(double x) { return std::fabs(x); }
inline quad r_abs(quad x) { return fabsq(x); }
inline double r_log(double x) { return std::log(x); }
inline quad r_log(quad x) { return logq(x); }

template <class Real>
constexpr Real series_eps();
template <>
constexpr double series_eps<double>() { return 1e-17; }
template <>
constexpr quad series_eps<quad>() { return 1e-34Q; }

struct SignedLog {
    double log_abs;
    int sign;
};

template <class Real>
struct ValueAndSlope {
    Real value;
    Real slope;
};

// Direct power series of 2F1(A, B; C; w) and its derivative, for 0 <= w <= 1/2.
template <class Real>
ValueAndSlope<Real> power_series(Real A, Real B, Real C, Real w)
{
    const Real eps = series_eps<Real>();
    Real term = 1;
    Real sum = 1;
    Real dsum = 0; // w * F'(w)
    for (int n = 0;; ++n) {
        if (n >= kMaxSeriesTerms)
            throw std::runtime_error("gauss_2f1: power series failed to converge");
        const Real ratio = (A + n) * (B + n) / ((C + n) * (n + 1)) * w;
        term *= ratio;
        if (term == 0)
            break;
        sum += term;
        dsum += (n + 1) * term;
        if (r_abs(term) <= eps * r_abs(sum) && (n + 1) * r_abs(term) <= eps * r_abs(dsum)
            && r_abs((A + n + 1) * (B + n + 1) / ((C + n + 1) * (n + 2)) * w) < Real(0.75))
            break;
    }
    const Real slope = w > 0 ? dsum / w : A * B / C;
    return {sum, slope};
}

// Continues the solution of w(1-w)F'' + [C - (A+B+1)w]F' - AB F = 0 from
// w0 = 1 - dist0 to w = 1 - dist, both distances measured to the singular
// point w = 1. Values are renormalised every step; the accumulated scale is
// returned through log_scale.
template <class Real>
Real continue_towards_one(Real A, Real B, Real C, Real dist0, Real dist, ValueAndSlope<Real> state,
                          Real& log_scale)
{
    const Real eps = series_eps<Real>();
    Real d0 = dist0;
    for (int step = 0; d0 > dist; ++step) {
        if (step >= kMaxContinuationSteps)
            throw std::runtime_error("gauss_2f1: analytic continuation did not reach its target");
        const Real h = std::min<Real>(d0 - dist, d0 / 2);
        const Real w0 = 1 - d0;
        const Real lead = w0 * d0;
        const Real linear = C - (A + B + 1) * w0;
        const Real curvature = 2 * d0 - 1;

        // Taylor coefficients scaled by h^n.
        Real prev = state.value;
        Real cur = state.slope * h;
        Real value = prev + cur;
        Real slope_h = cur;
        for (int n = 0;; ++n) {
            if (n >= kMaxSeriesTerms)
                throw std::runtime_error("gauss_2f1: continuation step failed to converge");
            const Real next = ((A + n) * (B + n) * h * h * prev
                               - (n + 1) * (curvature * n + linear) * h * cur)
                              / (lead * (n + 1) * (n + 2));
            value += next;
            slope_h += (n + 2) * next;
            const bool small = r_abs(next) + r_abs(cur) <= eps * r_abs(value)
                               && (n + 2) * (r_abs(next) + r_abs(cur)) <= eps * r_abs(slope_h);
            prev = cur;
            cur = next;
            if (small && n > 2)
                break;
        }
        state = {value, slope_h / h};
        d0 -= h;
        if (d0 - dist < eps * dist)
            d0 = dist;

        const Real scale = r_abs(state.value);
        if (scale > 0) {
            state.value /= scale;
            state.slope /= scale;
            log_scale += r_log(scale);
        }
    }
    return state.value;
}

// 2F1(A, B; C; w) for w in [0, 1), with dist = 1 - w supplied separately so
// that arguments close to 1 keep full relative accuracy.
template <class Real>
SignedLog series_in_unit_interval(Real A, Real B, Real C, Real w, Real dist)
{
    Real value;
    Real log_scale = 0;
    if (w <= Real(0.5)) {
        value = power_series(A, B, C, w).value;
    } else {
        const auto start = power_series(A, B, C, Real(0.5));
        value = continue_towards_one(A, B, C, Real(0.5), dist, start, log_scale);
    }
    if (value == 0)
        return {-std::numeric_limits<double>::infinity(), 0};
    const int sign = value > 0 ? 1 : -1;
    return {static_cast<double>(r_log(r_abs(value)) + log_scale), sign};
}

SignedLog unit_interval(double A, double B, double C, double w, double dist, bool positive_terms)
{
    if (positive_terms)
        return series_in_unit_interval<double>(A, B, C, w, dist);
    return series_in_unit_interval<quad>(A, B, C, w, dist);
}

SignedLog hyp2f1_signed_log(double a, double b, double c, double z)
{
    if (std::isnan(a) || std::isnan(b) || std::isnan(c) || std::isnan(z))
        throw std::domain_error("gauss_2f1: NaN argument");
    if (!(c > 0.0))
        throw std::domain_error("gauss_2f1: c must be positive, got " + std::to_string(c));
    if (z > 1.0)
        throw std::domain_error("gauss_2f1: z > 1 is outside the supported domain");
    if (z == 0.0 || a == 0.0 || b == 0.0)
        return {0.0, 1};

    if (z == 1.0) {
        const double excess = c - a - b;
        if (!(excess > 0.0))
            throw std::domain_error("gauss_2f1: series diverges at z = 1 unless c - a - b > 0");
        const auto nonpositive_integer = [](double x) { return x <= 0.0 && x == std::floor(x); };
        if (nonpositive_integer(c - a) || nonpositive_integer(c - b))
            return {-std::numeric_limits<double>::infinity(), 0};
        int sign = 1;
        int s = 0;
        double lg = std::lgamma(c); // c > 0
        lg += ::lgamma_r(excess, &s);
        double t = ::lgamma_r(c - a, &s);
        sign *= s;
        lg -= t;
        t = ::lgamma_r(c - b, &s);
        sign *= s;
        lg -= t;
        return {lg, sign};
    }

    if (z > 0.0)
        return unit_interval(a, b, c, z, 1.0 - z, a >= 0.0 && b >= 0.0);

    // Pfaff: 2F1(a, b; c; z) = (1 - z)^(-A) 2F1(A, c - B; c; z / (z - 1)),
    // with {A, B} = {a, b} in either order.
    const double w = -z / (1.0 - z);
    const double dist = 1.0 / (1.0 - z);
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);

    double A = lo;
    double B = hi;
    bool positive = lo >= 0.0 && c - hi >= 0.0;
    if (!positive && hi >= 0.0 && c - lo >= 0.0) {
        A = hi;
        B = lo;
        positive = true;
    }
    auto g = unit_interval(A, c - B, c, w, dist, positive);
    g.log_abs -= A * std::log1p(-z);
    return g;
}

} // namespace

double gauss_2f1(double a, double b, double c, double z)
{
    const auto r = hyp2f1_signed_log(a, b, c, z);
    if (r.sign == 0)
        return 0.0;
    return r.sign * std::exp(r.log_abs);
}

double log_gauss_2f1(double a, double b, double c, double z)
{
    const auto r = hyp2f1_signed_log(a, b, c, z);
    if (r.sign <= 0)
        throw std::domain_error("log_gauss_2f1: function value is not positive");
    return r.log_abs;
}

std::uint64_t composition_count(int total, int parts)
{
    if (total < 0 || parts < 1)
        return 0;
    // binomial(total + parts - 1, min(total, parts - 1)) computed incrementally
    const int n = total + parts - 1;
    const int k = std::min(total, parts - 1);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i)
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return result;
}

Compositions::Compositions(int total, int parts) : total_(total), parts_(parts)
{
    if (total < 0)
        throw std::domain_error("Compositions: total must be nonnegative");
    if (parts < 1)
        throw std::domain_error("Compositions: need at least one part");
}

Compositions::iterator::iterator(int total, int parts) : parts_(static_cast<std::size_t>(parts), 0), done_(false)
{
    parts_[0] = total;
}

Compositions::iterator& Compositions::iterator::operator++()
{
    if (done_)
        return *this;
    const std::size_t k = parts_.size();
    std::size_t i = 0;
    while (i < k && parts_[i] == 0)
        ++i;
    if (i + 1 >= k) {
        done_ = true;
        parts_.clear();
        return *this;
    }
    const int v = parts_[i];
    parts_[i] = 0;
    parts_[i + 1] += 1;
    parts_[0] = v - 1;
    return *this;
}

} // namespace mmoutage
