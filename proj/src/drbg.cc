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

#include "pdakit/drbg.h"

#include <openssl/evp.h>

#include <algorithm>
#include <memory>
#include <string>

#include "pdakit/error.h"

namespace pdakit {
namespace {

constexpr size_t kBlockBytes = 1024;

std::span<const uint8_t> AsBytes(std::string_view s) {
  return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

std::array<uint8_t, 8> BigEndian64(uint64_t v) {
  std::array<uint8_t, 8> out{};
  for (int i = 7; i >= 0; --i) {
    out[i] = static_cast<uint8_t>(v & 0xff);
    v >>= 8;
  }
  return out;
}

std::array<uint8_t, 32> DeriveKey(
    std::span<const std::span<const uint8_t>> parts) {
  std::vector<uint8_t> digest = Shake256(parts, 32);
  std::array<uint8_t, 32> key{};
  std::copy(digest.begin(), digest.end(), key.begin());
  return key;
}

}  // namespace

std::vector<uint8_t> Shake256(std::span<const std::span<const uint8_t>> parts,
                              size_t out_len) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(
      EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  Require(ctx != nullptr, ErrorCode::kIoError, "EVP_MD_CTX_new failed");
  Require(EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) == 1,
          ErrorCode::kIoError, "SHAKE256 init failed");
  for (const auto& part : parts) {
    Require(EVP_DigestUpdate(ctx.get(), part.data(), part.size()) == 1,
            ErrorCode::kIoError, "SHAKE256 update failed");
  }
  std::vector<uint8_t> out(out_len);
  Require(EVP_DigestFinalXOF(ctx.get(), out.data(), out_len) == 1,
          ErrorCode::kIoError, "SHAKE256 squeeze failed");
  return out;
}

Drbg::Drbg(uint64_t seed) {
  const auto seed_bytes = BigEndian64(seed);
  const std::span<const uint8_t> parts[] = {AsBytes("pdakit.drbg.u64"),
                                            seed_bytes};
  key_ = DeriveKey(parts);
}

Drbg::Drbg(std::span<const uint8_t> seed_material) {
  const std::span<const uint8_t> parts[] = {AsBytes("pdakit.drbg.bytes"),
                                            seed_material};
  key_ = DeriveKey(parts);
}

Drbg Drbg::Fork(std::string_view label) const {
  const auto len = BigEndian64(label.size());
  const std::span<const uint8_t> parts[] = {AsBytes("pdakit.drbg.fork"), key_,
                                            len, AsBytes(label)};
  Drbg child(0);
  child.key_ = DeriveKey(parts);
  return child;
}

Drbg Drbg::Fork(std::string_view label, uint64_t index) const {
  return Fork(std::string(label) + "#" + std::to_string(index));
}

void Drbg::Refill() {
  const auto ctr = BigEndian64(counter_++);
  const std::span<const uint8_t> parts[] = {key_, ctr};
  buffer_ = Shake256(parts, kBlockBytes);
  pos_ = 0;
}

void Drbg::Fill(std::span<uint8_t> out) {
  size_t done = 0;
  while (done < out.size()) {
    if (pos_ >= buffer_.size()) Refill();
    const size_t take = std::min(out.size() - done, buffer_.size() - pos_);
    std::copy_n(buffer_.begin() + pos_, take, out.begin() + done);
    pos_ += take;
    done += take;
  }
}

uint64_t Drbg::NextU64() {
  std::array<uint8_t, 8> raw{};
  Fill(raw);
  uint64_t v = 0;
  for (uint8_t b : raw) v = (v << 8) | b;
  return v;
}

BigInt Drbg::Bits(size_t bits) {
  if (bits == 0) return 0;
  std::vector<uint8_t> raw((bits + 7) / 8);
  Fill(raw);
  const size_t excess = raw.size() * 8 - bits;
  raw[0] &= static_cast<uint8_t>(0xff >> excess);
  return FromBytes(raw.data(), raw.size());
}

BigInt Drbg::Below(const BigInt& bound) {
  Require(sgn(bound) > 0, ErrorCode::kInvalidArgument,
          "Drbg::Below needs a positive bound");
  const size_t bits = BitLength(bound);
  // Rejection sampling keeps the distribution exactly uniform.
  while (true) {
    BigInt candidate = Bits(bits);
    if (candidate < bound) return candidate;
  }
}

BigInt Drbg::Range(const BigInt& lo, const BigInt& hi) {
  Require(lo < hi, ErrorCode::kInvalidArgument, "Drbg::Range needs lo < hi");
  return lo + Below(hi - lo);
}

BigInt Drbg::Unit(const BigInt& m) {
  Require(m > 1, ErrorCode::kInvalidArgument, "Drbg::Unit needs modulus > 1");
  while (true) {
    BigInt candidate = Range(1, m);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), candidate.get_mpz_t(), m.get_mpz_t());
    if (g == 1) return candidate;
  }
}

}  // namespace pdakit
