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

#ifndef QKOLAB_SMP_HPP_
#define QKOLAB_SMP_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qkolab/bit_string.hpp"
#include "qkolab/linear_code.hpp"

namespace qkolab::smp {

using codes::BitString;
using codes::LinearCode;

enum class Party { kAlice, kBob };
enum class Decision { kEqual, kNotEqual, kRestart };
std::string to_string(Party p);
std::string to_string(Decision d);

/// One message to the referee: classical bits, or a count of qubits for a
/// quantum register (the state itself stays in the simulator).
struct Message {
  Party party = Party::kAlice;
  BitString payload;
  std::size_t qubits = 0;
};

struct Transcript {
  std::vector<Message> messages;
  std::size_t classical_bits = 0;
  std::size_t qubits = 0;
  Decision decision = Decision::kRestart;
  int rounds = 1;
  /// SWAP-test outcomes (quantum and sampled classical simulation).
  std::vector<int> outcomes;
  /// Index collisions (multi-index classical protocol); 0 or 1 otherwise.
  std::size_t collisions = 0;
};

nlohmann::json to_json(const Transcript& t);

struct ClassicalVariant {
  enum class Kind { kSingleIndex, kMultiIndex };
  Kind kind = Kind::kSingleIndex;
  std::size_t s = 1;

  static ClassicalVariant single_index() { return {}; }
  static ClassicalVariant multi_index(std::size_t s) { return {Kind::kMultiIndex, s}; }
};

/// ceil(sqrt(m ln(2/delta_target))).
std::size_t multi_index_count(std::size_t m, double delta_target);

/// Each party sends (index, E_index(input)) pairs.
Transcript run_classical_equality(const BitString& x, const BitString& y, const LinearCode& code,
                                  const ClassicalVariant& variant, std::uint64_t seed);

/// k SWAP tests between independent copies of |h_x> and |h_y>; Equal iff all
/// outcomes are 0. Fingerprints must fit a (2M+1)-qubit SWAP circuit.
Transcript run_quantum_equality(const BitString& x, const BitString& y, const LinearCode& code,
                                int k, std::uint64_t seed);

enum class SimulationMode { kThreshold, kSampled };
std::string to_string(SimulationMode mode);

/// Parties send quantized fingerprint descriptions. Threshold mode decides
/// Equal iff |<h~x|h~y>| >= (1 + delta)/2; sampled mode draws k SWAP-test
/// outcomes from the decoded states, consuming the same random draws as
/// run_quantum_equality.
Transcript run_classical_simulation_of_quantum(const BitString& x, const BitString& y,
                                               const LinearCode& code, double eps_a,
                                               SimulationMode mode, int k, std::uint64_t seed);

/// Same, with an explicit number of bits per component.
Transcript run_classical_simulation_with_bits(const BitString& x, const BitString& y,
                                              const LinearCode& code, int p, SimulationMode mode,
                                              int k, std::uint64_t seed);

enum class Protocol { kClassical, kQuantum, kClassicalSim };
std::string to_string(Protocol p);
Protocol protocol_from_string(const std::string& name);

enum class InputMode { kUnequal, kEqual, kMixed };
std::string to_string(InputMode m);
InputMode input_mode_from_string(const std::string& name);

struct ExperimentConfig {
  std::size_t n = 4;
  std::string code = "hadamard";
  std::size_t rate_c = 4;
  Protocol protocol = Protocol::kQuantum;
  std::size_t trials = 1000;
  std::uint64_t master_seed = 0;
  int k = 1;
  /// Classical protocol: 0 = single index, otherwise indices per party.
  std::size_t s = 0;
  double eps_a = 1.0 / 4096.0;
  SimulationMode sim_mode = SimulationMode::kThreshold;
  InputMode inputs = InputMode::kUnequal;

  nlohmann::json to_json() const;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Wilson score interval; z = 2.5758293035489 gives 99%.
inline constexpr double kZ99 = 2.5758293035489;
Interval wilson_interval(std::size_t successes, std::size_t n, double z = kZ99);

struct ErrorReport {
  ExperimentConfig config;
  std::size_t trials = 0;
  std::size_t decided = 0;
  std::size_t restarts = 0;
  std::size_t equal_input_trials = 0;
  std::size_t unequal_input_trials = 0;
  std::size_t decided_equal_inputs = 0;
  std::size_t decided_unequal_inputs = 0;
  /// Unequal inputs declared Equal.
  std::size_t false_equal = 0;
  /// Equal inputs declared NotEqual.
  std::size_t false_not_equal = 0;
  std::size_t collision_trials = 0;
  double error_rate = 0.0;
  Interval wilson_99;
  double mean_bits = 0.0;
  double mean_qubits = 0.0;
  /// Mean over unequal-input trials of the exact wrong-answer probability
  /// (quantum protocol only, otherwise negative).
  double analytic_error_rate = -1.0;
  /// The single transcript when trials == 1.
  std::vector<Transcript> transcripts;

  nlohmann::json to_json() const;
};

/// Trial i uses seed derive_seed(master_seed, i) for inputs and protocol.
/// Results are aggregated in trial order, so thread count cannot change them.
ErrorReport monte_carlo(const ExperimentConfig& config);

struct CommunicationRow {
  std::string protocol;
  std::size_t n = 0;
  int q = 0;
  std::size_t classical_bits = 0;
  std::size_t qubits = 0;
  /// log2(classical-simulation bits) / quantum qubits.
  double ratio = 0.0;
};

/// Hadamard code, m = 2^n, q = n + 1: rows for "quantum" (2k(n+1) qubits),
/// "classical-sim" (2(2^(q+1) p + 64) bits) and "classical" (single index,
/// 2(n+1) bits) for each n in [n_min, n_max].
std::vector<CommunicationRow> communication_report(std::size_t n_min, std::size_t n_max, int p,
                                                   int k = 1);

}  // namespace qkolab::smp

#endif  // QKOLAB_SMP_HPP_
