// Copyright 2026 The qmine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmine/lognum.hpp"

#include "qmine/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qmine {

namespace {

constexpr double kLog10Of2 = 0.30102999566398119521;
constexpr double kSnapRelTol = 1e-9;

double snap_to_integer(double v, bool round_up)
{
    const double nearest = std::round(v);
    if (std::abs(v - nearest) <= kSnapRelTol * std::max(1.0, std::abs(v)))
        return nearest;
    return round_up ? std::ceil(v) : std::floor(v);
}

}  // namespace

LogQuantity LogQuantity::from_value(double x)
{
    if (!std::isfinite(x) || x < 0.0)
        throw InvalidInput("LogQuantity requires a finite nonnegative value, got " + std::to_string(x));
    if (x == 0.0)
        return zero();
    return from_log10(std::log10(x));
}

LogQuantity LogQuantity::from_log10(double log10_value)
{
    if (!std::isfinite(log10_value))
        throw InvalidInput("LogQuantity exponent must be finite");
    LogQuantity q;
    q.zero_ = false;
    q.log10_ = log10_value;
    return q;
}

LogQuantity LogQuantity::from_log2(double exponent)
{
    if (!std::isfinite(exponent))
        throw InvalidInput("lq_from_log2: exponent must be finite");
    return from_log10(exponent * kLog10Of2);
}

double LogQuantity::log10() const
{
    return zero_ ? std::numeric_limits<double>::quiet_NaN() : log10_;
}

double LogQuantity::log2() const
{
    return zero_ ? std::numeric_limits<double>::quiet_NaN() : log10_ / kLog10Of2;
}

double LogQuantity::value() const
{
    if (zero_)
        return 0.0;
    return std::pow(10.0, log10_);
}

std::optional<double> LogQuantity::linear() const
{
    if (zero_)
        return 0.0;
    if (log10_ >= kLinearLog10Limit)
        return std::nullopt;
    return value();
}

LogQuantity LogQuantity::ceil() const
{
    if (zero_ || log10_ >= kExactLog10Limit)
        return *this;
    return from_value(snap_to_integer(value(), true));
}

LogQuantity LogQuantity::floor() const
{
    if (zero_ || log10_ >= kExactLog10Limit)
        return *this;
    return from_value(snap_to_integer(value(), false));
}

LogQuantity operator*(const LogQuantity& a, const LogQuantity& b)
{
    if (a.zero_ || b.zero_)
        return LogQuantity::zero();
    return LogQuantity::from_log10(a.log10_ + b.log10_);
}

LogQuantity operator/(const LogQuantity& a, const LogQuantity& b)
{
    if (b.zero_)
        throw InvalidInput("LogQuantity division by zero");
    if (a.zero_)
        return LogQuantity::zero();
    return LogQuantity::from_log10(a.log10_ - b.log10_);
}

LogQuantity operator+(const LogQuantity& a, const LogQuantity& b)
{
    if (a.zero_)
        return b;
    if (b.zero_)
        return a;
    const double hi = std::max(a.log10_, b.log10_);
    const double lo = std::min(a.log10_, b.log10_);
    return LogQuantity::from_log10(hi + std::log10(1.0 + std::pow(10.0, lo - hi)));
}

bool operator<(const LogQuantity& a, const LogQuantity& b)
{
    if (a.zero_)
        return !b.zero_;
    if (b.zero_)
        return false;
    return a.log10_ < b.log10_;
}

LogQuantity min(const LogQuantity& a, const LogQuantity& b)
{
    return b < a ? b : a;
}

LogQuantity lq_from_log2(double exponent)
{
    return LogQuantity::from_log2(exponent);
}

LogQuantity lq_mul(const LogQuantity& a, const LogQuantity& b)
{
    return a * b;
}

LogQuantity lq_ratio_of_logs(double numerator_ln, double denominator_ln)
{
    if (!(numerator_ln < 0.0) || !(denominator_ln < 0.0))
        throw InvalidInput("lq_ratio_of_logs: both logs must be strictly negative "
                           "(probabilities must lie in (0,1))");
    const double ratio = numerator_ln / denominator_ln;
    if (std::isfinite(ratio) && ratio > 0.0)
        return LogQuantity::from_value(ratio);
    return LogQuantity::from_log10(std::log10(-numerator_ln) - std::log10(-denominator_ln));
}

LogQuantity lq_ratio_of_logs(double numerator_ln, const LogQuantity& denominator_abs)
{
    if (!(numerator_ln < 0.0) || denominator_abs.is_zero())
        throw InvalidInput("lq_ratio_of_logs: numerator must be negative and denominator nonzero");
    return LogQuantity::from_value(-numerator_ln) / denominator_abs;
}

}  // namespace qmine
