// Copyright 2026 The qkolab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qkolab/bit_string.hpp"

#include <gtest/gtest.h>

#include "qkolab/errors.hpp"
#include "qkolab/random.hpp"

namespace qkolab::codes {
namespace {

TEST(BitStringTest, TextRoundTrip) {
  const auto b = BitString::from_string("1011001");
  EXPECT_EQ(b.size(), 7u);
  EXPECT_TRUE(b[0]);
  EXPECT_FALSE(b[1]);
  EXPECT_EQ(b.to_string(), "1011001");
  EXPECT_EQ(b.popcount(), 4u);
}

TEST(BitStringTest, RejectsForeignCharacters) {
  EXPECT_THROW(BitString::from_string("10a1"), InputError);
}

TEST(BitStringTest, UintIsMostSignificantFirst) {
  EXPECT_EQ(BitString::from_uint(4, 3).to_string(), "100");
  EXPECT_EQ(BitString::from_uint(5, 8).to_string(), "00000101");
  const auto b = BitString::from_string("0110100111");
  EXPECT_EQ(b.read_uint(2, 5), 0b10100u);
}

TEST(BitStringTest, AppendAndSliceAcrossWordBoundaries) {
  Rng rng(1);
  BitString a;
  std::string text;
  for (int i = 0; i < 300; ++i) {
    const bool bit = rng.bit();
    a.push_back(bit);
    text.push_back(bit ? '1' : '0');
  }
  BitString b = a;
  b.append_uint(0x2d, 6);
  EXPECT_EQ(b.to_string(), text + "101101");
  EXPECT_EQ(a.slice(61, 70).to_string(), text.substr(61, 70));
  BitString c = a.slice(0, 10);
  c.append(a.slice(10, 290));
  EXPECT_EQ(c, a);
}

TEST(BitStringTest, BytesAreBigEndianAndZeroPadded) {
  const auto b = BitString::from_string("1000000011");
  const auto bytes = b.to_bytes();
  ASSERT_EQ(bytes.size(), 2u);
  EXPECT_EQ(bytes[0], 0x80);
  EXPECT_EQ(bytes[1], 0xc0);
  EXPECT_EQ(BitString::from_bytes(bytes, 10), b);
  EXPECT_THROW(BitString::from_bytes(bytes, 17), InputError);
}

TEST(BitStringTest, XorAndHammingDistance) {
  const auto a = BitString::from_string("110010");
  const auto b = BitString::from_string("011011");
  EXPECT_EQ((a ^ b).to_string(), "101001");
  EXPECT_EQ(hamming_distance(a, b), 3u);
  BitString c = a;
  c.flip(0);
  EXPECT_EQ(c.to_string(), "010010");
}

TEST(BitStringTest, BitsFor) {
  EXPECT_EQ(bits_for(1), 0u);
  EXPECT_EQ(bits_for(2), 1u);
  EXPECT_EQ(bits_for(3), 2u);
  EXPECT_EQ(bits_for(4), 2u);
  EXPECT_EQ(bits_for(5), 3u);
  EXPECT_EQ(bits_for(1024), 10u);
}

}  // namespace
}  // namespace qkolab::codes
