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
#include "qmine/grover_sim.hpp"
#include "qmine/monte_carlo.hpp"
#include "qmine/ripemd160.hpp"
#include "qmine/sha256.hpp"
#include "qmine/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

using namespace qmine;

namespace {

std::string hex(std::span<const std::uint8_t> b)
{
    return to_hex(b);
}

}  // namespace

TEST_SUITE("verify_oracles")
{
TEST_CASE("SHA-256 standard vectors")
{
    CHECK(hex(sha256_digest("")) == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(hex(sha256_digest("abc")) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(hex(sha256_digest("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq")) ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    CHECK(hex(sha256_digest(std::string(1000000, 'a'))) ==
          "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

TEST_CASE("incremental hashing matches one-shot at every split")
{
    std::string msg;
    for (int i = 0; i < 200; ++i)
        msg.push_back(char('A' + i % 57));
    const auto whole = sha256_digest(msg);
    for (std::size_t cut = 0; cut <= msg.size(); cut += 7) {
        Sha256 h;
        h.update(std::string_view(msg).substr(0, cut)).update(std::string_view(msg).substr(cut));
        CHECK(h.finish() == whole);
    }
}

TEST_CASE("double SHA-256 of the genesis header")
{
    const auto header = from_hex(
        "01000000"
        "0000000000000000000000000000000000000000000000000000000000000000"
        "3ba3edfd7a7b12b27ac72c3e67768f617fc81bc3888a51323a9fb8aa4b1e5e4a"
        "29ab5f49ffff001d1dac2b7c");
    REQUIRE(header.size() == 80);
    auto digest = double_sha256(header);
    CHECK(digest == sha256_digest(sha256_digest(header)));
    std::reverse(digest.begin(), digest.end());  // display order
    CHECK(hex(digest) == "000000000019d6689c085ae165831e934ff763ae46a2a6c172b3f1b60a8ce26f");

    const std::vector<std::uint8_t> zeros(80, 0);
    CHECK(double_sha256(zeros) == sha256_digest(sha256_digest(zeros)));

    CHECK_THROWS_AS(from_hex("abc"), InvalidInput);
    CHECK_THROWS_AS(from_hex("zz"), InvalidInput);
}

TEST_CASE("RIPEMD-160 standard vectors")
{
    CHECK(hex(ripemd160_digest("")) == "9c1185a5c5e9fc54612808977ee8f548b2258d31");
    CHECK(hex(ripemd160_digest("abc")) == "8eb208f7e05d987a9b044a8e98c6b087f15a0bfc");
    CHECK(hex(ripemd160_digest("message digest")) == "5d0689ef49d2fae572b881b123a85ffa21595f36");
    CHECK(hex(ripemd160_digest("12345678901234567890123456789012345678901234567890123456789012345678901234567890")) ==
          "9b752e45573d4b39f4dbd3323cab82bf63326bfb");
    CHECK(hex(ripemd160_digest(std::string(1000000, 'a'))) == "52783243c1697bdbe16d37f97f68f08325dc1528");
}

TEST_CASE("hash160 is RIPEMD-160 after SHA-256")
{
    // Compressed generator point, whose hash160 is a well-known address payload.
    const auto pubkey = from_hex("0279be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798");
    const auto h = hash160(pubkey);
    CHECK(h == ripemd160_digest(sha256_digest(pubkey)));
    CHECK(hex(h) == "751e76e8199196d454941c45d1b3a323f1433bd6");
}

TEST_CASE("state-vector simulator")
{
    CHECK(grover_simulate(MarkedSet::first(2, 1), 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(grover_simulate(MarkedSet::first(4, 1), 3) == doctest::Approx(std::pow(std::sin(7 * std::asin(0.25)), 2)));
    CHECK(grover_simulate(MarkedSet::first(4, 1), 3) == doctest::Approx(0.9613).epsilon(1e-4));
    CHECK(grover_simulate(MarkedSet::first(6, 3), 0) == doctest::Approx(3.0 / 64));

    // Marked indices need not be contiguous.
    MarkedSet scattered{10, {3, 500, 777, 1023}};
    const double theta = std::asin(std::sqrt(4.0 / 1024));
    const int r = int(std::nearbyint(std::numbers::pi / (4 * theta) - 0.5));
    CHECK(std::abs(grover_simulate(scattered, r) - std::pow(std::sin((2 * r + 1) * theta), 2)) < 1e-9);

    const GroverTrace trace = grover_trace(MarkedSet::first(9, 5), 40);
    REQUIRE(trace.norm.size() == 41);
    for (double n : trace.norm)
        CHECK(std::abs(n - 1.0) < 1e-12);

    CHECK_THROWS_AS(MarkedSet::first(15, 1).validate(), CapacityError);
    CHECK_THROWS_AS(grover_simulate(MarkedSet::first(15, 1), 1), CapacityError);
    CHECK_THROWS_AS(grover_simulate(MarkedSet{4, {}}, 1), InvalidInput);
    CHECK_THROWS_AS(grover_simulate(MarkedSet{4, {16}}, 1), InvalidInput);
    CHECK_THROWS_AS(grover_simulate(MarkedSet{4, {1, 1}}, 1), InvalidInput);
    CHECK_THROWS_AS(grover_simulate(MarkedSet::first(4, 1), -1), InvalidInput);
}

TEST_CASE("closed form matches the simulator over the marked-set grid")
{
    for (int n = 1; n <= 10; ++n) {
        const std::uint32_t N = 1u << n;
        for (std::uint32_t m : {1u, 2u, 4u, N / 4, N / 2, N}) {
            if (m < 1 || m > N)
                continue;
            const double theta = std::asin(std::sqrt(double(m) / N));
            const int r_opt = int(std::max(1.0, std::nearbyint(std::numbers::pi / (4 * theta) - 0.5)));
            const GroverTrace t = grover_trace(MarkedSet::first(n, m), 2 * r_opt);
            for (int r = 0; r <= 2 * r_opt; ++r)
                CHECK(std::abs(t.success[r] - grover_closed_form(n, m, r)) < 1e-9);
            // At least even odds at the optimum while marked items are a minority.
            if (2 * m <= N)
                CHECK(t.success[r_opt] >= 0.5 - 1e-12);
        }
    }
}

TEST_CASE("leading-zero predicate reads the digest big-endian")
{
    std::array<std::uint8_t, 32> d{};
    d[0] = 0x00;
    d[1] = 0x7f;
    CHECK(has_leading_zero_bits(d.data(), 9));
    CHECK_FALSE(has_leading_zero_bits(d.data(), 10));
    CHECK(has_leading_zero_bits(d.data(), 0));
    d[0] = 0x80;
    CHECK_FALSE(has_leading_zero_bits(d.data(), 1));
}

TEST_CASE("Monte Carlo hit rate")
{
    const HitRateEstimate zero = monte_carlo_hit_rate(0, 10000);
    CHECK(zero.estimate == 1.0);
    CHECK(zero.hits == 10000);

    const std::int64_t n = 1000000;
    const HitRateEstimate b8 = monte_carlo_hit_rate(8, n, 7);
    const double p = 1.0 / 256;
    const double sigma = std::sqrt(p * (1 - p) / double(n));
    CHECK(std::abs(b8.estimate - p) <= 3 * sigma);
    CHECK(b8.std_error == doctest::Approx(std::sqrt(b8.estimate * (1 - b8.estimate) / double(n))));

    // Thread count does not change the answer for a fixed seed.
    const HitRateEstimate a = monte_carlo_hit_rate(4, 200000, 99, 1);
    const HitRateEstimate b = monte_carlo_hit_rate(4, 200000, 99, 3);
    CHECK(a.hits == b.hits);
    CHECK(monte_carlo_hit_rate(4, 200000, 100, 1).hits != a.hits);

    CHECK_THROWS_AS(monte_carlo_hit_rate(25, 10000), CapacityError);
    CHECK_THROWS_AS(monte_carlo_hit_rate(8, 9999), InvalidInput);
    CHECK_THROWS_AS(monte_carlo_hit_rate(-1, 10000), InvalidInput);
}

TEST_CASE("self-check suites pass")
{
    for (const auto& r : verify_hash_vectors()) {
        CAPTURE(r.name);
        CHECK(r.passed);
    }
    for (const auto& r : verify_grover_closed_form(8)) {
        CAPTURE(r.name);
        CHECK(r.passed);
    }
    for (const auto& r : verify_monte_carlo({4}, 100000, kDefaultSeed)) {
        CAPTURE(r.detail);
        CHECK(r.passed);
    }
}
}
