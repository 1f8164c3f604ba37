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

#pragma once

#include <optional>

namespace qmine {

/// A nonnegative magnitude carried as log10 so that fleet sizes, qubit
/// totals and wattages up to ~10^300 (and far beyond, in principle) never
/// overflow. Zero is represented explicitly.
class LogQuantity {
public:
    /// Ceiling and integer snapping are exact below this log10 magnitude.
    static constexpr double kExactLog10Limit = 15.0;
    /// Linear values are serialized only below this log10 magnitude.
    static constexpr double kLinearLog10Limit = 300.0;

    constexpr LogQuantity() = default;

    static LogQuantity zero() { return LogQuantity{}; }
    static LogQuantity one() { return from_log10(0.0); }

    /// Throws InvalidInput on negative or non-finite input.
    static LogQuantity from_value(double x);
    static LogQuantity from_log10(double log10_value);
    static LogQuantity from_log2(double exponent);

    bool is_zero() const { return zero_; }
    /// Undefined (NaN) for zero.
    double log10() const;
    double log2() const;
    /// Linear value; +inf when it does not fit in a double.
    double value() const;
    /// Linear value when log10 < kLinearLog10Limit, nullopt otherwise.
    std::optional<double> linear() const;

    /// Integer ceiling below 10^15 (values within 1e-9 relative of an
    /// integer snap to it); identity above.
    LogQuantity ceil() const;
    /// Integer floor with the same snapping rule.
    LogQuantity floor() const;

    friend LogQuantity operator*(const LogQuantity& a, const LogQuantity& b);
    friend LogQuantity operator/(const LogQuantity& a, const LogQuantity& b);
    friend LogQuantity operator+(const LogQuantity& a, const LogQuantity& b);

    friend bool operator<(const LogQuantity& a, const LogQuantity& b);
    friend bool operator==(const LogQuantity& a, const LogQuantity& b) = default;

private:
    bool zero_ = true;
    double log10_ = 0.0;
};

inline bool operator>(const LogQuantity& a, const LogQuantity& b) { return b < a; }
inline bool operator<=(const LogQuantity& a, const LogQuantity& b) { return !(b < a); }
inline bool operator>=(const LogQuantity& a, const LogQuantity& b) { return !(a < b); }

LogQuantity min(const LogQuantity& a, const LogQuantity& b);

// Free-function spellings used throughout the estimator.
LogQuantity lq_from_log2(double exponent);
LogQuantity lq_mul(const LogQuantity& a, const LogQuantity& b);

/// Positive ratio numerator_ln / denominator_ln of two natural logs of
/// probabilities. Both must be strictly negative.
LogQuantity lq_ratio_of_logs(double numerator_ln, double denominator_ln);

/// Ratio where the denominator is itself carried as a LogQuantity magnitude:
/// returns |numerator_ln| / denominator. Used when ln(1-p) ~ -p underflows.
LogQuantity lq_ratio_of_logs(double numerator_ln, const LogQuantity& denominator_abs);

}  // namespace qmine
