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

#ifndef QKOLAB_ERRORS_HPP_
#define QKOLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qkolab {

/// Malformed or inconsistent input: wrong lengths, invalid parameters,
/// unparseable payloads. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request that is well formed but exceeds a resource cap (qubit counts,
/// exhaustive-search sizes). The CLI maps this to exit code 3.
class CapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Decoding failure for a bit-exact format; carries the bit offset at which
/// the payload stopped making sense.
class DecodeError : public InputError {
 public:
  DecodeError(const std::string& what, std::size_t bit_offset)
      : InputError(what + " (at bit offset " + std::to_string(bit_offset) + ")"),
        bit_offset_(bit_offset) {}

  std::size_t bit_offset() const { return bit_offset_; }

 private:
  std::size_t bit_offset_;
};

namespace tol {
inline constexpr double kNorm = 1e-10;
inline constexpr double kEigenFloor = 1e-9;
inline constexpr double kAnalytic = 1e-12;
inline constexpr double kSingularValue = 1e-9;
}  // namespace tol

}  // namespace qkolab

#endif  // QKOLAB_ERRORS_HPP_
