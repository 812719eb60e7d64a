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

#ifndef QKOLAB_FINGERPRINT_HPP_
#define QKOLAB_FINGERPRINT_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "qkolab/bit_string.hpp"
#include "qkolab/circuit.hpp"
#include "qkolab/linear_code.hpp"
#include "qkolab/random.hpp"
#include "qkolab/state.hpp"

namespace qkolab::fingerprint {

using codes::BitString;
using codes::LinearCode;
using qsim::Circuit;
using qsim::StateVector;

/// (1/sqrt m) sum_i |i>|E_i(x)> on index_qubits + 1 qubits. The value qubit
/// is the last (least significant) one. For m below 2^index_qubits the
/// remaining index states carry zero amplitude.
struct Fingerprint {
  BitString x;
  BitString codeword;
  int index_qubits = 0;
  StateVector state;

  int qubits() const { return index_qubits + 1; }
};

Fingerprint build_fingerprint(const LinearCode& code, const BitString& x);

/// |{i : E_i(x) = E_i(y)}| / m, which equals <h_x|h_y>.
double overlap(const LinearCode& code, const BitString& x, const BitString& y);

/// Decomposition used for the multi-controlled X gates of build_hx_circuit.
inline constexpr const char* kMcxDecompositionId = "nc-toffoli-ladder/v1";
inline constexpr int kMaxCircuitIndexQubits = 6;

/// Preparation circuit for |h_x>. Qubits: index 0..k-1, value k, then k-2
/// clean work qubits (k >= 3) used by the Toffoli ladder and returned to |0>.
struct HxCircuit {
  Circuit circuit;
  int index_qubits = 0;
  int work_qubits = 0;
  std::string decomposition_id;
};

/// Requires m = 2^k with 1 <= k <= 6.
HxCircuit build_hx_circuit(const LinearCode& code, const BitString& x);

/// Drops the work qubits of a state produced by an HxCircuit. Throws
/// InputError if they are not all |0> (the result would not be normalized).
StateVector data_register(const HxCircuit& hx, const StateVector& full);

enum class ExtractionStatus { kExact, kCorrected, kNotACodeword };
std::string to_string(ExtractionStatus status);

struct ExtractionOptions {
  /// When set, a readout equal to codeword E(y) is accepted only if
  /// |<h_y|state>|^2 >= min_fidelity.
  std::optional<double> min_fidelity;
  /// Snap a non-codeword readout to the unique nearest codeword within
  /// half the minimum distance (n <= 12 only).
  bool correct = false;
};

/// Smallest min_fidelity that rules out a wrong codeword for any state with
/// |<h_x|state>|^2 >= 1 - eps, given pairwise overlaps <= delta:
/// cos^2(arccos(delta) - arccos(sqrt(1 - eps))), plus a 1e-12 margin so
/// the boundary itself is excluded. Infinity when the two
/// cones touch, i.e. nothing can be accepted safely.
double exclusion_fidelity(double delta, double eps);

struct ExtractionResult {
  /// Readout (or corrected) word of length m.
  BitString word;
  ExtractionStatus status = ExtractionStatus::kNotACodeword;
  /// Message x with E(x) = word, when status is not kNotACodeword.
  std::optional<BitString> message;
};

/// Bit i is the value with the larger squared amplitude at index i. Equal
/// masses, including zero, make the state not a codeword.
ExtractionResult extract_codeword(const StateVector& state, const LinearCode& code,
                                  const ExtractionOptions& options = {});

/// sqrt(F) s + sqrt(1-F) v with v a Haar-random unit vector orthogonal to s,
/// so that |<s|result>|^2 = F.
StateVector perturb_to_fidelity(const StateVector& s, double fidelity, Rng& rng);

}  // namespace qkolab::fingerprint

#endif  // QKOLAB_FINGERPRINT_HPP_
