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

#ifndef QKOLAB_QUANTIZED_HPP_
#define QKOLAB_QUANTIZED_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qkolab/bit_string.hpp"
#include "qkolab/state.hpp"

namespace qkolab::fingerprint {

inline constexpr std::size_t kQuantizedHeaderBits = 64;
inline constexpr int kMaxComponentBits = 62;

/// Fixed-point amplitude list. Layout: 16-bit q, 16-bit p, 32-bit reserved
/// (zero), 2^q real parts, then 2^q imaginary parts, each a p-bit two's
/// complement integer v standing for v * 2^(1-p). Bits are big-endian.
struct QuantizedDescription {
  int q = 0;
  int p = 0;
  codes::BitString bits;

  std::size_t length_bits() const { return bits.size(); }
  /// Byte form, zero-padded at the end.
  std::vector<std::uint8_t> to_bytes() const { return bits.to_bytes(); }
};

/// 2^(q+1) * p + 64.
std::size_t quantized_length_bits(int q, int p);

/// Bits per component for a target precision eps_a: one more than the
/// smallest p0 with 2^-p0 <= eps_a, so each rounding error is at most eps_a/2.
int component_bits_for(double eps_a);

QuantizedDescription quantize_state(const qsim::StateVector& s, double eps_a);
QuantizedDescription quantize_state_bits(const qsim::StateVector& s, int p);

/// Decoded and renormalized state. Throws InputError if every component
/// rounded to zero.
qsim::StateVector decode_state(const QuantizedDescription& d);

/// Parses the bit layout; `bits` may carry trailing zero padding.
QuantizedDescription parse_quantized(const codes::BitString& bits);
QuantizedDescription parse_quantized(std::span<const std::uint8_t> bytes);

}  // namespace qkolab::fingerprint

#endif  // QKOLAB_QUANTIZED_HPP_
