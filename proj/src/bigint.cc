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

#include "pdakit/bigint.h"

#include "pdakit/error.h"

namespace pdakit {

std::string ToHex(const BigInt& value) {
  Require(sgn(value) >= 0, ErrorCode::kInvalidArgument,
          "hex serialization of a negative integer");
  return value.get_str(16);
}

BigInt FromHex(std::string_view hex) {
  Require(!hex.empty(), ErrorCode::kParseError, "empty hex string");
  for (char c : hex) {
    const bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    Require(ok, ErrorCode::kParseError,
            "invalid hex digit in '" + std::string(hex) + "'");
  }
  return BigInt(std::string(hex), 16);
}

std::vector<uint8_t> ToBytes(const BigInt& value) {
  Require(sgn(value) >= 0, ErrorCode::kInvalidArgument,
          "byte export of a negative integer");
  if (value == 0) return {};
  size_t count = (mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8;
  std::vector<uint8_t> out(count);
  size_t written = 0;
  mpz_export(out.data(), &written, 1, 1, 1, 0, value.get_mpz_t());
  out.resize(written);
  return out;
}

BigInt FromBytes(const uint8_t* data, size_t size) {
  BigInt out;
  if (size > 0) mpz_import(out.get_mpz_t(), size, 1, 1, 1, 0, data);
  return out;
}

size_t BitLength(const BigInt& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

}  // namespace pdakit
