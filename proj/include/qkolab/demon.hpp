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

#ifndef QKOLAB_DEMON_HPP_
#define QKOLAB_DEMON_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "qkolab/bit_string.hpp"
#include "qkolab/state.hpp"

namespace qkolab::demon {

using codes::BitString;

/// Boltzmann constant in J/K (exact SI value), a convenience default only.
inline constexpr double kBoltzmann = 1.380649e-23;

/// theta = k pi / 2^m, k the value of r read most significant bit first.
double angle_from_record(const BitString& r);

struct DemonRecord {
  BitString r;
  int outcome_bit = 0;
  /// outcome bit followed by r; read as the binary fraction 0.b r.
  BitString full_record;
};

struct EntropyLedger {
  std::size_t n = 1;
  std::size_t m = 0;
  std::string strategy = "single";
  double s_in = 0.0;
  double i_in = 0.0;
  double s_fin = 0.0;
  double i_fin = 0.0;
  double kb = kBoltzmann;
  double temperature = 300.0;
  /// Empty for record-length accounting.
  std::string surrogate_method;

  double delta_total() const { return (s_fin + i_fin) - (s_in + i_in); }
  double work() const;
  nlohmann::json to_json() const;
};

struct DemonStep {
  DemonRecord record;
  double theta = 0.0;
  qsim::StateVector post_state;
  EntropyLedger ledger;
};

/// Randomizes r (m bits) from the seed, measures I/2 in the basis
/// {cos t|0> + sin t|1>, -sin t|0> + cos t|1>}, returns the selected basis
/// vector and the ledger S: 1 -> 0, I: 0 -> m + 1.
DemonStep demon_step(std::size_t m, std::uint64_t seed, double kb, double temperature);

enum class Strategy { kProduct, kEntangled };
enum class LedgerMode { kFormula, kSimulated };
std::string to_string(Strategy s);
std::string to_string(LedgerMode m);
Strategy strategy_from_string(const std::string& name);
LedgerMode ledger_mode_from_string(const std::string& name);

struct MultiphotonParams {
  std::size_t n = 2;
  std::size_t m = 3;
  Strategy strategy = Strategy::kProduct;
  LedgerMode mode = LedgerMode::kFormula;
  double eps = 1.0 / 16.0;
  double kb = kBoltzmann;
  double temperature = 300.0;
  std::uint64_t seed = 0;
};

/// product: delta = n m. entangled formula: delta = 2^n log2(1/eps) - n.
/// entangled simulated: I_fin is the CBE surrogate of a fingerprint state on
/// n qubits (concatenated code, PRNG message), delta = I_fin - n.
EntropyLedger multiphoton_ledger(const MultiphotonParams& params);

struct MultiphotonComparison {
  EntropyLedger product;
  EntropyLedger entangled;
  bool entangled_exceeds_product = false;

  nlohmann::json to_json() const;
};
MultiphotonComparison multiphoton_comparison(const MultiphotonParams& params);

enum class Setting { kSingle, kMultiProduct, kMultiProjection };
std::string to_string(Setting s);
Setting setting_from_string(const std::string& name);

struct BackgroundReport {
  Setting setting = Setting::kSingle;
  std::size_t n = 1;
  std::size_t m = 0;
  /// Descriptor: 8-bit template id, 32-bit m, 32-bit n (multi settings),
  /// then the compressed target amplitudes (projection setting).
  std::size_t descriptor_bits = 0;
  std::size_t descriptor_compressed_bits = 0;
  std::size_t target_raw_cbe_bits = 0;
  std::size_t target_cbe_bits = 0;
  std::string method_id;

  nlohmann::json to_json() const;
};

/// Description length of the candidate-state list for each setting. The
/// projection setting draws a Haar-random n-qubit target from `seed` and
/// quantizes it at eps.
BackgroundReport background_information_report(Setting setting, std::size_t n, std::size_t m,
                                               double eps = 1.0 / 65536.0, std::uint64_t seed = 0);

}  // namespace qkolab::demon

#endif  // QKOLAB_DEMON_HPP_
