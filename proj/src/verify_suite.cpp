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

#include "qmine/verify_suite.hpp"

#include "qmine/grover_sim.hpp"
#include "qmine/monte_carlo.hpp"
#include "qmine/ripemd160.hpp"
#include "qmine/sha256.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

namespace qmine {

namespace {

struct Vector {
    const char* label;
    std::string message;
    const char* expected;
};

std::string repeat(const std::string& s, int n)
{
    std::string out;
    for (int i = 0; i < n; ++i)
        out += s;
    return out;
}

std::string fmt(const char* f, double a, double b)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

}  // namespace

std::vector<CheckResult> verify_hash_vectors()
{
    std::vector<CheckResult> out;
    const std::vector<Vector> sha = {
        {"empty", "", "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"},
        {"abc", "abc", "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"},
        {"448-bit", "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq",
         "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1"},
        {"896-bit",
         "abcdefghbcdefghicdefghijdefghijkefghijklfghijklmghijklmnhijklmnoijklmnopjklmnopqklmnopqrlmnopqrsmnopqrstnopqrstu",
         "cf5b16a778af8380036ce59e7b0492370b249b11e8f07a51afac45037afee9d1"},
        {"million-a", std::string(1000000, 'a'), "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0"},
    };
    for (const auto& v : sha) {
        const std::string got = to_hex(sha256_digest(v.message));
        out.push_back({"sha256", v.label, got == v.expected, got});
    }

    const std::vector<Vector> rmd = {
        {"empty", "", "9c1185a5c5e9fc54612808977ee8f548b2258d31"},
        {"a", "a", "0bdc9d2d256b3ee9daae347be6f4dc835a467ffe"},
        {"abc", "abc", "8eb208f7e05d987a9b044a8e98c6b087f15a0bfc"},
        {"message digest", "message digest", "5d0689ef49d2fae572b881b123a85ffa21595f36"},
        {"a-z", "abcdefghijklmnopqrstuvwxyz", "f71c27109c692c1b56bbdceb5b9d2865b3708dbc"},
        {"448-bit", "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq",
         "12a053384a9c0c88e405a06c27dcf49ada62eb2b"},
        {"alnum", "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789",
         "b0e20b6e3116640286ed3a87a5713079b21f5189"},
        {"8x1234567890", repeat("1234567890", 8), "9b752e45573d4b39f4dbd3323cab82bf63326bfb"},
        {"million-a", std::string(1000000, 'a'), "52783243c1697bdbe16d37f97f68f08325dc1528"},
    };
    for (const auto& v : rmd) {
        const std::string got = to_hex(ripemd160_digest(v.message));
        out.push_back({"ripemd160", v.label, got == v.expected, got});
    }

    // Bitcoin genesis header; the block hash is the byte-reversed digest.
    const auto genesis = from_hex(
        "0100000000000000000000000000000000000000000000000000000000000000000000003ba3edfd7a7b12b27ac72c3e67768f61"
        "7fc81bc3888a51323a9fb8aa4b1e5e4a29ab5f49ffff001d1dac2b7c");
    auto d = double_sha256(genesis);
    std::reverse(d.begin(), d.end());
    const std::string got = to_hex(d);
    out.push_back({"double_sha256", "genesis block",
                   got == "000000000019d6689c085ae165831e934ff763ae46a2a6c172b3f1b60a8ce26f", got});

    const auto pubkey = from_hex("0250863ad64a87ae8a2fe83c1af1a8403cb53f53e486d8511dad8a04887e5b2352");
    const std::string h160 = to_hex(hash160(pubkey));
    out.push_back({"hash160", "compressed pubkey", h160 == "f54a5851e9372b87810a8e60cdd2e7cfd80b6e31", h160});
    return out;
}

std::vector<CheckResult> verify_grover_closed_form(int max_bits, double tolerance)
{
    std::vector<CheckResult> out;
    for (int n = 1; n <= max_bits; ++n) {
        const std::uint32_t N = 1u << n;
        std::set<std::uint32_t> ms = {1, 2, 4, N / 4, N / 2, N};
        double worst = 0.0;
        std::size_t cases = 0;
        for (std::uint32_t m : ms) {
            if (m < 1 || m > N)
                continue;
            const double theta = std::asin(std::sqrt(double(m) / N));
            const int r_opt = std::max(1, int(std::lround(std::numbers::pi / (4 * theta) - 0.5)));
            const GroverTrace trace = grover_trace(MarkedSet::first(n, m), 2 * r_opt);
            for (int r = 0; r <= 2 * r_opt; ++r) {
                worst = std::max(worst, std::abs(trace.success[r] - grover_closed_form(n, m, r)));
                worst = std::max(worst, std::abs(trace.norm[r] - 1.0));
                ++cases;
            }
        }
        out.push_back({"grover", "n=" + std::to_string(n), worst <= tolerance,
                       fmt("max deviation %.3g over %.0f cases", worst, double(cases))});
    }
    return out;
}

std::vector<CheckResult> verify_monte_carlo(const std::vector<int>& bits, std::int64_t samples, std::uint64_t seed)
{
    std::vector<CheckResult> out;
    for (int b : bits) {
        const HitRateEstimate e = monte_carlo_hit_rate(b, samples, seed);
        const double p = std::ldexp(1.0, -b);
        const double sigma = std::sqrt(p * (1.0 - p) / double(samples));
        const double z = sigma > 0.0 ? std::abs(e.estimate - p) / sigma : 0.0;
        out.push_back({"monte_carlo", "b=" + std::to_string(b), z <= 3.0,
                       fmt("estimate %.6g, deviation %.2f sigma", e.estimate, z)});
    }
    return out;
}

}  // namespace qmine
