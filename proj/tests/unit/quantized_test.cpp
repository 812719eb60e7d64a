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

#include "qkolab/quantized.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "qkolab/errors.hpp"
#include "qkolab/random.hpp"

namespace qkolab::fingerprint {
namespace {

using qsim::StateVector;

TEST(QuantizedTest, LengthFormula) {
  EXPECT_EQ(quantized_length_bits(3, 10), 160u + kQuantizedHeaderBits);
  for (int q = 1; q <= 10; ++q) {
    for (int p : {2, 9, 33}) {
      EXPECT_EQ(quantized_length_bits(q, p),
                (std::size_t{1} << (q + 1)) * static_cast<std::size_t>(p) + 64);
    }
  }
}

TEST(QuantizedTest, ComponentBitsCoverHalfStepBelowEps) {
  EXPECT_EQ(component_bits_for(std::ldexp(1.0, -12)), 13);
  EXPECT_EQ(component_bits_for(0.3), 3);
  for (double eps : {0.1, 0.01, 1e-5, 3e-9}) {
    const int p = component_bits_for(eps);
    EXPECT_LE(std::ldexp(1.0, -p), eps / 2.0);
  }
  EXPECT_THROW(component_bits_for(0.0), InputError);
  EXPECT_THROW(component_bits_for(1e-30), InputError);
}

TEST(QuantizedTest, BitExactLayout) {
  const double r = 1.0 / std::sqrt(2.0);
  const auto s = StateVector::from_amplitudes({r, qsim::cplx(0.0, -r)});
  const auto d = quantize_state_bits(s, 4);
  // Scale 2^-3: 0.7071 -> 6 = 0110, -0.7071 -> -6 = 1010.
  const std::string header =
      std::string(15, '0') + "1" + std::string(13, '0') + "100" + std::string(32, '0');
  EXPECT_EQ(d.bits.to_string(), header + "0110" + "0000" + "0000" + "1010");
  EXPECT_EQ(d.to_bytes().size(), 10u);
}

TEST(QuantizedTest, ZeroStateRoundTrips) {
  for (double eps : {0.2, 1e-3}) {
    const auto d = quantize_state(StateVector::zero(2), eps);
    EXPECT_NEAR(std::norm(qsim::inner(StateVector::zero(2), decode_state(d))), 1.0, 1e-15);
  }
}

TEST(QuantizedTest, FidelityBoundOnRandomStates) {
  Rng rng(61);
  const double eps = std::ldexp(1.0, -12);
  for (int t = 0; t < 500; ++t) {
    const auto s = StateVector::haar_random(6, rng);
    const double f = std::norm(qsim::inner(s, decode_state(quantize_state(s, eps))));
    EXPECT_GE(f, 1.0 - std::ldexp(1.0, 5) * eps * eps);
  }
}

TEST(QuantizedTest, ParseRoundTripsBitsAndBytes) {
  Rng rng(62);
  const auto s = StateVector::haar_random(3, rng);
  const auto d = quantize_state_bits(s, 11);
  const auto from_bits = parse_quantized(d.bits);
  EXPECT_EQ(from_bits.bits, d.bits);
  EXPECT_EQ(from_bits.q, 3);
  EXPECT_EQ(from_bits.p, 11);
  const auto bytes = d.to_bytes();
  EXPECT_EQ(parse_quantized(bytes).bits, d.bits);
}

TEST(QuantizedTest, ParseRejectsCorruption) {
  const auto d = quantize_state_bits(StateVector::zero(1), 6);
  codes::BitString reserved = d.bits;
  reserved.set(40, true);
  EXPECT_THROW(parse_quantized(reserved), DecodeError);
  EXPECT_THROW(parse_quantized(d.bits.slice(0, 70)), DecodeError);
  codes::BitString bad_p = d.bits;
  bad_p.set(31, false);
  bad_p.set(30, false);
  bad_p.set(29, false);  // p = 0
  EXPECT_THROW(parse_quantized(bad_p), DecodeError);
}

}  // namespace
}  // namespace qkolab::fingerprint
