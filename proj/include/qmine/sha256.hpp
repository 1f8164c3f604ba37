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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qmine {

using Sha256Digest = std::array<std::uint8_t, 32>;

/// Incremental SHA-256 (FIPS 180-4).
class Sha256 {
public:
    Sha256();
    Sha256& update(std::span<const std::uint8_t> data);
    Sha256& update(std::string_view text);
    Sha256Digest finish();

private:
    void compress(const std::uint8_t* block);

    std::array<std::uint32_t, 8> state_;
    std::array<std::uint8_t, 64> buffer_{};
    std::size_t buffered_ = 0;
    std::uint64_t total_bytes_ = 0;
};

Sha256Digest sha256_digest(std::span<const std::uint8_t> message);
Sha256Digest sha256_digest(std::string_view message);
/// sha256(sha256(m)).
Sha256Digest double_sha256(std::span<const std::uint8_t> message);

/// Lowercase hex of any byte range.
std::string to_hex(std::span<const std::uint8_t> bytes);
/// Throws InvalidInput on odd length or non-hex characters.
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace qmine
