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

#include "pdakit/paillier.h"

#include <gtest/gtest.h>

#include "pdakit/error.h"
#include "pdakit/numtheory.h"

namespace pdakit::paillier {
namespace {

TEST(Paillier, ToyKeyFromElevenAndThirteen) {
  KeyPair kp = KeyPairFromPrimes(11, 13);
  EXPECT_EQ(kp.pub.n_a, 143);
  EXPECT_EQ(kp.lambda, 60);
}

TEST(Paillier, ToyKeyFifteen) {
  KeyPair kp = KeyPairFromPrimes(3, 5);
  EXPECT_EQ(kp.lambda, 4);
  EXPECT_EQ(kp.mu, 4);
}

TEST(Paillier, ZeroWithUnitRandomizerIsOne) {
  KeyPair kp = KeyPairFromPrimes(11, 13);
  Ciphertext c = EncryptWith(0, kp.pub, 1);
  EXPECT_EQ(c.value, 1);
  EXPECT_EQ(Decrypt(c, kp), 0);
}

TEST(Paillier, HomomorphicAdditionToy) {
  KeyPair kp = KeyPairFromPrimes(3, 5);
  Drbg rng(1);
  Ciphertext sum = Add(Encrypt(2, kp.pub, rng), Encrypt(3, kp.pub, rng), kp.pub);
  EXPECT_EQ(Decrypt(sum, kp), 5);
}

TEST(Paillier, ScalarMultiplicationToy) {
  KeyPair kp = KeyPairFromPrimes(11, 13);
  Drbg rng(2);
  EXPECT_EQ(Decrypt(Scale(Encrypt(2, kp.pub, rng), 7, kp.pub), kp), 14);
}

TEST(Paillier, RoundTripRandomMessages) {
  Drbg rng(3);
  KeyPair kp = GenerateKeyPair(64, rng);
  EXPECT_EQ(BitLength(kp.pub.n_a), 64u);
  for (int i = 0; i < 1000; ++i) {
    const BigInt m = rng.Below(kp.pub.n_a);
    ASSERT_EQ(Decrypt(Encrypt(m, kp.pub, rng), kp), m);
  }
}

TEST(Paillier, ReRandomizationKeepsPlaintext) {
  Drbg rng(4);
  KeyPair kp = GenerateKeyPair(48, rng);
  for (int i = 0; i < 100; ++i) {
    const BigInt m = rng.Below(kp.pub.n_a);
    const BigInt s = rng.Unit(kp.pub.n_a);
    Ciphertext c = Encrypt(m, kp.pub, rng);
    Ciphertext r = Blind(c, nt::ModPow(s, kp.pub.n_a, kp.pub.n_a_sq), kp.pub);
    EXPECT_EQ(Decrypt(r, kp), m);
  }
}

TEST(Paillier, HomomorphismProperties) {
  Drbg rng(5);
  KeyPair kp = KeyPairFromPrimes(1009, 1013);
  const BigInt half = kp.pub.n_a / 2;
  for (int i = 0; i < 300; ++i) {
    const BigInt m1 = rng.Below(half), m2 = rng.Below(half);
    const BigInt a = rng.Below(BigInt(1) << 40);
    Ciphertext c1 = Encrypt(m1, kp.pub, rng), c2 = Encrypt(m2, kp.pub, rng);
    ASSERT_EQ(Decrypt(Add(c1, c2, kp.pub), kp), m1 + m2);
    ASSERT_EQ(Decrypt(Scale(c1, a, kp.pub), kp), nt::Mod(m1 * a, kp.pub.n_a));
  }
}

TEST(Paillier, BlindingUnitAndInverseCancel) {
  Drbg rng(6);
  KeyPair kp = GenerateKeyPair(40, rng);
  for (int i = 0; i < 100; ++i) {
    const BigInt m = rng.Below(kp.pub.n_a);
    const BigInt k = rng.Unit(kp.pub.n_a_sq);
    Ciphertext c = Encrypt(m, kp.pub, rng);
    Ciphertext b = Blind(Blind(c, k, kp.pub), nt::ModInv(k, kp.pub.n_a_sq), kp.pub);
    EXPECT_EQ(b, c);
  }
}

TEST(Paillier, MessageTooLarge) {
  KeyPair kp = KeyPairFromPrimes(11, 13);
  try {
    EncryptWith(143, kp.pub, 1);
    FAIL() << "expected MessageTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMessageTooLarge);
  }
}

TEST(Paillier, InvalidCiphertextRejected) {
  KeyPair kp = KeyPairFromPrimes(11, 13);
  for (const BigInt& bad : {BigInt(0), BigInt(11), BigInt(143 * 143)}) {
    try {
      Decrypt(Ciphertext{bad}, kp);
      FAIL() << "expected InvalidCiphertext for " << bad.get_str();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidCiphertext);
    }
  }
}

TEST(Paillier, RequiredBitsCoversWorstCaseSum) {
  const BigInt n = (BigInt(1) << 64) - 59;
  const size_t terms = 6;
  const size_t bits = RequiredModulusBits(n, terms);
  const BigInt worst = BigInt(terms) * (n - 1) * (n * n - 1);
  EXPECT_LT(worst, BigInt(1) << (bits - 1));
}

}  // namespace
}  // namespace pdakit::paillier
