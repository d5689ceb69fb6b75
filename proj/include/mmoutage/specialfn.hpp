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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <vector>

namespace mmoutage {

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// CDF of an Erlang (integer-shape Gamma) variable with the given rate:
/// 1 - exp(-rate x) sum_{l<shape} (rate x)^l / l!.
double erlang_cdf(double x, int shape, double rate);

/// Gauss hypergeometric function 2F1(a, b; c; z) for real z < 1 (and z == 1
/// when c - a - b > 0).
///
/// Negative z is mapped by the Pfaff transformation onto w = z / (z - 1) in
/// [0, 1). The w-series is summed directly for w <= 1/2; beyond that the
/// solution of the hypergeometric equation is continued from w = 1/2 by
/// Taylor steps that never exceed half the distance to the singular point
/// w = 1. When no transformation yields a series with terms of one sign the
/// evaluation is carried out in quad precision.
///
/// Throws std::domain_error for c <= 0 and for z > 1.
double gauss_2f1(double a, double b, double c, double z);

/// ln 2F1(a, b; c; z) for arguments where the function is positive.
/// Avoids the overflow and underflow that gauss_2f1 hits for |z| large.
double log_gauss_2f1(double a, double b, double c, double z);

/// Number of length-K tuples of nonnegative integers summing to t,
/// i.e. binomial(t + K - 1, K - 1).
std::uint64_t composition_count(int total, int parts);

/// Lazily enumerates every length-K tuple of nonnegative integers that
/// sums to `total`, in colexicographic order, starting from (t, 0, ..., 0)
/// and ending at (0, ..., 0, t).
class Compositions {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = std::vector<int>;
        using difference_type = std::ptrdiff_t;
        using pointer = const std::vector<int>*;
        using reference = const std::vector<int>&;

        iterator() = default;
        reference operator*() const { return parts_; }
        pointer operator->() const { return &parts_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& lhs, const iterator& rhs)
        {
            return lhs.done_ == rhs.done_ && (lhs.done_ || lhs.parts_ == rhs.parts_);
        }

    private:
        friend class Compositions;
        iterator(int total, int parts);

        std::vector<int> parts_;
        bool done_ = true;
    };

    Compositions(int total, int parts);

    iterator begin() const { return iterator(total_, parts_); }
    iterator end() const { return iterator(); }

    int total() const { return total_; }
    int parts() const { return parts_; }

private:
    int total_;
    int parts_;
};

/// Neumaier's compensated summation.
class CompensatedSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    CompensatedSum& operator+=(double x)
    {
        add(x);
        return *this;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Accumulates ln(sum_k exp(x_k)) without overflow. Terms equal to -inf
/// contribute nothing; the empty sum is -inf.
class LogSumExp {
public:
    void add(double log_term)
    {
        if (log_term == -std::numeric_limits<double>::infinity())
            return;
        if (log_term <= max_) {
            scaled_ += std::exp(log_term - max_);
        } else {
            scaled_ = scaled_ * std::exp(max_ - log_term) + 1.0;
            max_ = log_term;
        }
    }
    double value() const
    {
        if (scaled_ == 0.0)
            return -std::numeric_limits<double>::infinity();
        return max_ + std::log(scaled_);
    }

private:
    double max_ = -std::numeric_limits<double>::infinity();
    double scaled_ = 0.0;
};

} // namespace mmoutage
