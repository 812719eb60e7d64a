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

#ifndef QKOLAB_CIRCUIT_ENCODING_HPP_
#define QKOLAB_CIRCUIT_ENCODING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qkolab/bit_string.hpp"
#include "qkolab/circuit.hpp"

namespace qkolab::complexity {

using codes::BitString;
using qsim::Circuit;

/// Header: 8-bit format version, 16-bit q, 8-bit basis flag, 8-bit p,
/// 32-bit record count.
inline constexpr std::size_t kCircuitHeaderBits = 72;
inline constexpr int kOpcodeBits = 6;
inline constexpr std::uint8_t kLoopOpcode = 63;

/// Version 1 lists every gate. Version 2 may also contain loop records:
/// opcode 63, 32-bit repeat count, target-width stride, 8-bit body length L,
/// then L gate records; repetition r adds r * stride to every target.
enum class EncodingForm : std::uint8_t { kFlat = 1, kCompact = 2 };

struct CircuitEncoding {
  int format_version = 1;
  qsim::GateBasis basis;
  /// Header, records and zero padding to a byte boundary.
  BitString payload;
};

/// ceil(log2 q): bits per qubit index.
std::size_t target_bits(int q);

/// Smallest p with 2^-p <= eps, the rotation precision for accuracy eps.
int angle_bits_for(double eps);

CircuitEncoding encode_circuit(const Circuit& c, EncodingForm form = EncodingForm::kFlat);

/// Throws DecodeError with the bit offset of the first inconsistency.
Circuit decode_circuit(const BitString& payload);
inline Circuit decode_circuit(const CircuitEncoding& e) { return decode_circuit(e.payload); }

/// Container file: "QKCE" then the payload bytes.
std::vector<std::uint8_t> to_container(const CircuitEncoding& e);
CircuitEncoding from_container(std::span<const std::uint8_t> bytes);

}  // namespace qkolab::complexity

#endif  // QKOLAB_CIRCUIT_ENCODING_HPP_
