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

#ifndef PDAKIT_DRBG_H_
#define PDAKIT_DRBG_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pdakit/bigint.h"

namespace pdakit {

// SHAKE256 over the concatenation of `parts`, squeezed to `out_len` bytes.
std::vector<uint8_t> Shake256(std::span<const std::span<const uint8_t>> parts,
                              size_t out_len);

// Deterministic, seedable generator built on SHAKE256. One instance drives a
// ceremony; each party gets its own stream through Fork(), so a run is a pure
// function of the root seed and the fork labels.
class Drbg {
 public:
  explicit Drbg(uint64_t seed);
  explicit Drbg(std::span<const uint8_t> seed_material);

  // Child stream keyed by (this key, label). Does not advance this stream.
  Drbg Fork(std::string_view label) const;
  Drbg Fork(std::string_view label, uint64_t index) const;

  void Fill(std::span<uint8_t> out);
  uint64_t NextU64();

  // Uniform in [0, 2^bits).
  BigInt Bits(size_t bits);
  // Uniform in [0, bound); bound must be positive.
  BigInt Below(const BigInt& bound);
  // Uniform in [lo, hi).
  BigInt Range(const BigInt& lo, const BigInt& hi);
  // Uniform over the units of Z_m.
  BigInt Unit(const BigInt& m);

 private:
  void Refill();

  std::array<uint8_t, 32> key_{};
  uint64_t counter_ = 0;
  std::vector<uint8_t> buffer_;
  size_t pos_ = 0;
};

}  // namespace pdakit

#endif  // PDAKIT_DRBG_H_
