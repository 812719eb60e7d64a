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

#ifndef QKOLAB_LINEAR_CODE_HPP_
#define QKOLAB_LINEAR_CODE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qkolab/bit_string.hpp"

namespace qkolab::codes {

enum class VerificationMode { kUnverified, kExhaustive, kSampled };

std::string to_string(VerificationMode mode);

/// How verify_distance should look at the code.
struct DistanceCheck {
  enum class Kind { kExhaustive, kSampled };
  Kind kind = Kind::kExhaustive;
  std::size_t samples = 0;  // sampled mode only
  std::uint64_t seed = 0;   // sampled mode only

  static DistanceCheck exhaustive() { return {}; }
  static DistanceCheck sampled(std::size_t samples, std::uint64_t seed = 0x5eed) {
    return {Kind::kSampled, samples, seed};
  }
};

/// Result of a distance scan. delta = 1 - min_distance / m.
struct DistanceVerification {
  double delta = 1.0;
  std::size_t min_distance = 0;
  VerificationMode mode = VerificationMode::kUnverified;
  /// Number of nonzero codewords whose weight was inspected.
  std::size_t codewords_checked = 0;
};

/// Largest message length verified exhaustively (2^n <= 4096).
inline constexpr std::size_t kExhaustiveMaxMessageBits = 12;

/// Binary linear code E: {0,1}^n -> {0,1}^m given by an n x m generator.
class LinearCode {
 public:
  /// Rows must all have the same length m >= n >= 1 and be linearly
  /// independent over GF(2).
  LinearCode(std::string name, std::vector<BitString> generator_rows);

  const std::string& name() const { return name_; }
  std::size_t n() const { return rows_.size(); }
  std::size_t m() const { return rows_.front().size(); }
  double rate_c() const { return static_cast<double>(m()) / static_cast<double>(n()); }
  const std::vector<BitString>& generator() const { return rows_; }

  std::optional<double> delta_verified() const;
  const std::optional<DistanceVerification>& verification() const { return verification_; }
  /// Copy of this code carrying a verification record.
  LinearCode with_verification(const DistanceVerification& v) const;

  /// x * G over GF(2). Throws InputError when x.size() != n.
  BitString encode(const BitString& x) const;
  /// Message whose codeword is `word`, or nullopt when `word` is not in the code.
  std::optional<BitString> message_of(const BitString& word) const;
  bool is_codeword(const BitString& word) const { return message_of(word).has_value(); }

  /// Generator rows, one per message bit, are what make two codes equal.
  bool same_generator(const LinearCode& other) const { return rows_ == other.rows_; }

 private:
  std::string name_;
  std::vector<BitString> rows_;
  // Information set: `pivots_` are n columns whose n x n submatrix is
  // invertible; `inverse_rows_[j]` expresses message bits from those columns.
  std::vector<std::size_t> pivots_;
  std::vector<BitString> inverse_rows_;
  std::optional<DistanceVerification> verification_;
};

/// E_z(x) = <x, z> mod 2 over all z in {0,1}^n in integer order (z's most
/// significant bit pairs with x's first bit). m = 2^n, distance 2^(n-1).
/// Verified exhaustively for n <= 12, by 256 samples above.
LinearCode hadamard_code(std::size_t n);

/// Simplex code: the Hadamard code without the all-zero column. m = 2^n - 1.
LinearCode simplex_code(std::size_t n);

/// Deterministic stand-in for an asymptotically good code with m = c * n.
/// n = 1 gives the repetition code. Otherwise a systematic random linear code
/// [I_n | R]; the best of a fixed set of seeded candidates (by minimum
/// distance) is kept. delta is measured, never assumed.
LinearCode concatenated_code(std::size_t n, std::size_t target_rate_c);

/// "hadamard", "simplex" or "concatenated" (the latter uses rate_c).
LinearCode code_by_name(const std::string& name, std::size_t n, std::size_t rate_c = 4);

/// delta = 1 - (min nonzero codeword weight) / m. For linear codes this is the
/// minimum pairwise distance. Exhaustive mode refuses 2^n > 4096 with a
/// CapError suggesting sampled mode.
DistanceVerification verify_distance(const LinearCode& code, const DistanceCheck& check);

/// Code descriptor file: {name, n, m, generator (hex rows), delta_verified,
/// verification_mode}.
nlohmann::json code_descriptor(const LinearCode& code);
LinearCode code_from_descriptor(const nlohmann::json& descriptor);

}  // namespace qkolab::codes

#endif  // QKOLAB_LINEAR_CODE_HPP_
