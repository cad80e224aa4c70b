/*
 * Copyright 2026 The pdakit Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PDAKIT_BIGINT_H_
#define PDAKIT_BIGINT_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pdakit {

// Arbitrary-precision integer used for every group element, exponent and
// coefficient. Values that represent residues are kept in [0, modulus).
using BigInt = mpz_class;

// Lowercase big-endian hex without prefix; zero is "0".
std::string ToHex(const BigInt& value);

// Accepts only [0-9a-f]+ (no sign, no prefix). Throws kParseError.
BigInt FromHex(std::string_view hex);

// Big-endian magnitude bytes; zero encodes as an empty vector.
std::vector<uint8_t> ToBytes(const BigInt& value);
BigInt FromBytes(const uint8_t* data, size_t size);

size_t BitLength(const BigInt& value);

}  // namespace pdakit

#endif  // PDAKIT_BIGINT_H_
