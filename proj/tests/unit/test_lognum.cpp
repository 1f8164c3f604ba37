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


#include "doctest.h"

#include "qmine/errors.hpp"
#include "qmine/lognum.hpp"

#include <cmath>
#include <limits>

using namespace qmine;

TEST_SUITE("lognum")
{
TEST_CASE("construction from values and exponents")
{
    CHECK(LogQuantity::zero().is_zero());
    CHECK(LogQuantity::one().log10() == 0.0);
    CHECK(LogQuantity::from_value(1000.0).log10() == doctest::Approx(3.0));
    CHECK(LogQuantity::from_value(0.0).is_zero());
    // 224 log10(2), computed directly
    CHECK(lq_from_log2(224).log10() == doctest::Approx(224 * std::log10(2.0)).epsilon(1e-14));
    CHECK(lq_from_log2(224).log10() == doctest::Approx(67.43).epsilon(1e-4));
    CHECK(lq_from_log2(-10).value() == doctest::Approx(1.0 / 1024).epsilon(1e-13));

    CHECK_THROWS_AS(LogQuantity::from_value(-1.0), InvalidInput);
    CHECK_THROWS_AS(LogQuantity::from_value(std::nan("")), InvalidInput);
    CHECK_THROWS_AS(LogQuantity::from_log10(std::numeric_limits<double>::infinity()), InvalidInput);
}

TEST_CASE("products and ratios stay finite far beyond double range")
{
    const LogQuantity big = LogQuantity::from_log10(300.0);
    const LogQuantity prod = big * big * big;
    CHECK(prod.log10() == doctest::Approx(900.0));
    CHECK_FALSE(prod.linear().has_value());
    CHECK((prod / big).log10() == doctest::Approx(600.0));
    CHECK(lq_mul(big, LogQuantity::zero()).is_zero());
    CHECK_THROWS_AS(big / LogQuantity::zero(), InvalidInput);
    CHECK(LogQuantity::from_value(5.0).linear().value() == doctest::Approx(5.0));
}

TEST_CASE("sums use the stable log-add form")
{
    const LogQuantity a = LogQuantity::from_value(3.0);
    const LogQuantity b = LogQuantity::from_value(4.0);
    CHECK((a + b).value() == doctest::Approx(7.0).epsilon(1e-14));
    const LogQuantity huge = LogQuantity::from_log10(500.0);
    CHECK((huge + LogQuantity::one()).log10() == doctest::Approx(500.0));
    CHECK((huge + huge).log10() == doctest::Approx(500.0 + std::log10(2.0)).epsilon(1e-15));
    CHECK((LogQuantity::zero() + a).value() == doctest::Approx(3.0));
}

TEST_CASE("ratio of logs in the tiny-probability regime")
{
    // ln(0.01)/ln(0.5) = log2(100)
    CHECK(lq_ratio_of_logs(std::log(0.01), std::log(0.5)).value() == doctest::Approx(std::log2(100.0)));
    CHECK(lq_ratio_of_logs(std::log(0.01), std::log(0.5)).value() == doctest::Approx(6.6439).epsilon(1e-4));
    CHECK(lq_ratio_of_logs(std::log(0.5), std::log1p(-0.0063938)).value() == doctest::Approx(108.06).epsilon(1e-4));

    // Denominator of magnitude 1e-300 only representable through a LogQuantity.
    const LogQuantity tiny = LogQuantity::from_log10(-400.0);
    const LogQuantity r = lq_ratio_of_logs(std::log(0.5), tiny);
    CHECK(r.log10() == doctest::Approx(400.0 + std::log10(std::log(2.0))).epsilon(1e-14));

    CHECK_THROWS_AS(lq_ratio_of_logs(0.0, -1.0), InvalidInput);
    CHECK_THROWS_AS(lq_ratio_of_logs(-1.0, 0.5), InvalidInput);
    CHECK_THROWS_AS(lq_ratio_of_logs(-1.0, LogQuantity::zero()), InvalidInput);
}

TEST_CASE("ceil and floor are exact for representable integers")
{
    CHECK(LogQuantity::from_value(108.06).ceil().value() == doctest::Approx(109.0).epsilon(1e-15));
    CHECK(LogQuantity::from_value(108.06).floor().value() == doctest::Approx(108.0).epsilon(1e-15));
    // Values that are integers up to log round-off do not step over.
    const LogQuantity seven = LogQuantity::from_log10(std::log10(7.0));
    CHECK(seven.ceil().value() == doctest::Approx(7.0).epsilon(1e-15));
    CHECK(seven.floor().value() == doctest::Approx(7.0).epsilon(1e-15));
    // Beyond 1e15 rounding is a no-op.
    const LogQuantity far = LogQuantity::from_log10(40.5);
    CHECK(far.ceil().log10() == far.log10());
}

TEST_CASE("ordering")
{
    const LogQuantity a = LogQuantity::from_log10(-3.0);
    const LogQuantity b = LogQuantity::from_log10(2.0);
    CHECK(a < b);
    CHECK(LogQuantity::zero() < a);
    CHECK_FALSE(a < LogQuantity::zero());
    CHECK(min(a, b).log10() == a.log10());
    CHECK(b > a);
    CHECK(a <= a);
}
}
