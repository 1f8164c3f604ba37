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

#include "qmine/sha256.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace qmine {

using Ripemd160Digest = std::array<std::uint8_t, 20>;

Ripemd160Digest ripemd160_digest(std::span<const std::uint8_t> message);
Ripemd160Digest ripemd160_digest(std::string_view message);

/// ripemd160(sha256(m)), the P2PKH address hash.
Ripemd160Digest hash160(std::span<const std::uint8_t> message);

}  // namespace qmine
