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

#ifndef QKOLAB_COMPRESSOR_HPP_
#define QKOLAB_COMPRESSOR_HPP_

#include <cstddef>
#include <string>

#include "qkolab/bit_string.hpp"

namespace qkolab::codes {

/// Identifier of the one compressor configuration used everywhere.
inline constexpr const char* kCompressorMethodId = "ctw16-kt-ac32/v1";

/// Container header: 8-bit mode/version byte, 32-bit input length in bits.
inline constexpr std::size_t kCompressorHeaderBits = 40;

/// Context-tree depth in bits.
inline constexpr int kCtwDepth = 16;

/// Upper-bound surrogate for the classical Kolmogorov complexity of a string.
struct ComplexitySurrogate {
  std::size_t raw_length_bits = 0;
  /// Full container length, header included.
  std::size_t compressed_length_bits = 0;
  std::string method_id;

  double ratio() const {
    return raw_length_bits == 0
               ? 0.0
               : static_cast<double>(compressed_length_bits) / static_cast<double>(raw_length_bits);
  }
};

/// Lossless, deterministic. Output = header + payload, where the payload is
/// either the CTW/arithmetic-coded stream or the raw bits (whichever is
/// shorter). Inputs must be shorter than 2^32 bits.
BitString compress(const BitString& input);

/// Inverse of compress. Throws DecodeError on a malformed container.
BitString decompress(const BitString& container);

ComplexitySurrogate kcl_upper(const BitString& w);

}  // namespace qkolab::codes

#endif  // QKOLAB_COMPRESSOR_HPP_
