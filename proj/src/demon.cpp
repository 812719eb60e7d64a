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

#include "qkolab/demon.hpp"

#include <cmath>
#include <numbers>

#include "qkolab/complexity.hpp"
#include "qkolab/compressor.hpp"
#include "qkolab/errors.hpp"
#include "qkolab/fingerprint.hpp"
#include "qkolab/linear_code.hpp"
#include "qkolab/measures.hpp"
#include "qkolab/quantized.hpp"
#include "qkolab/random.hpp"

namespace qkolab::demon {

double angle_from_record(const BitString& r) {
  if (r.empty()) throw InputError("angle_from_record: empty record");
  if (r.size() > 64) throw InputError("angle_from_record: record longer than 64 bits");
  const std::uint64_t k = r.read_uint(0, r.size());
  return std::ldexp(static_cast<double>(k), -static_cast<int>(r.size())) * std::numbers::pi;
}

double EntropyLedger::work() const { return delta_total() * kb * temperature * std::numbers::ln2; }

nlohmann::json EntropyLedger::to_json() const {
  return {{"n", n},
          {"m", m},
          {"strategy", strategy},
          {"S_in", s_in},
          {"I_in", i_in},
          {"S_fin", s_fin},
          {"I_fin", i_fin},
          {"delta_total_bits", delta_total()},
          {"work_joules", work()},
          {"kB", kb},
          {"T", temperature},
          {"surrogate_method", surrogate_method.empty() ? "record-length" : surrogate_method}};
}

namespace {

void check_thermal(double kb, double temperature) {
  if (!(kb > 0.0) || !(temperature > 0.0)) throw InputError("kB and T must be positive");
}

}  // namespace

DemonStep demon_step(std::size_t m, std::uint64_t seed, double kb, double temperature) {
  if (m < 1 || m > 64) throw InputError("demon_step needs 1 <= m <= 64");
  check_thermal(kb, temperature);
  Rng rng(seed);
  DemonStep step{{}, 0.0, qsim::StateVector::zero(1), {}};
  step.record.r = BitString(m);
  for (std::size_t i = 0; i < m; ++i) step.record.r.set(i, rng.bit());
  step.theta = angle_from_record(step.record.r);
  const double c = std::cos(step.theta);
  const double s = std::sin(step.theta);
  const std::vector<std::vector<qsim::cplx>> vectors = {{c, s}, {-s, c}};
  const auto basis = qsim::MeasurementBasis::from_vectors(vectors);
  const auto outcome =
      qsim::sample_measurement(qsim::DensityMatrix::maximally_mixed(1), basis, rng);
  step.record.outcome_bit = static_cast<int>(outcome);
  step.record.full_record.push_back(outcome != 0);
  step.record.full_record.append(step.record.r);
  step.post_state = qsim::StateVector::from_amplitudes(vectors[outcome]);
  step.ledger.n = 1;
  step.ledger.m = m;
  step.ledger.strategy = "single";
  step.ledger.s_in = 1.0;
  step.ledger.i_in = 0.0;
  step.ledger.s_fin = 0.0;
  step.ledger.i_fin = static_cast<double>(m + 1);
  step.ledger.kb = kb;
  step.ledger.temperature = temperature;
  return step;
}

std::string to_string(Strategy s) { return s == Strategy::kProduct ? "product" : "entangled"; }
std::string to_string(LedgerMode m) { return m == LedgerMode::kFormula ? "formula" : "simulated"; }

Strategy strategy_from_string(const std::string& name) {
  if (name == "product") return Strategy::kProduct;
  if (name == "entangled") return Strategy::kEntangled;
  throw InputError("unknown strategy '" + name + "' (expected product, entangled)");
}

LedgerMode ledger_mode_from_string(const std::string& name) {
  if (name == "formula") return LedgerMode::kFormula;
  if (name == "simulated") return LedgerMode::kSimulated;
  throw InputError("unknown ledger mode '" + name + "' (expected formula, simulated)");
}

EntropyLedger multiphoton_ledger(const MultiphotonParams& p) {
  check_thermal(p.kb, p.temperature);
  if (p.n < 1) throw InputError("multiphoton_ledger needs n >= 1");
  EntropyLedger l;
  l.n = p.n;
  l.m = p.m;
  l.strategy = to_string(p.strategy);
  l.kb = p.kb;
  l.temperature = p.temperature;
  l.s_in = static_cast<double>(p.n);
  if (p.strategy == Strategy::kProduct) {
    if (p.m < 1 || p.m > 64) throw InputError("product strategy needs 1 <= m <= 64");
    l.i_fin = static_cast<double>(p.n * (p.m + 1));
    return l;
  }
  if (!(p.eps > 0.0 && p.eps < 1.0)) throw InputError("eps must lie in (0, 1)");
  if (p.mode == LedgerMode::kFormula) {
    if (p.n > 16) throw CapError("formula mode supports n <= 16");
    l.i_fin = std::ldexp(std::log2(1.0 / p.eps), static_cast<int>(p.n));
    return l;
  }
  if (p.n < 2 || p.n > 8) throw CapError("simulated mode supports 2 <= n <= 8");
  const std::size_t code_m = std::size_t{1} << (p.n - 1);
  const std::size_t c = code_m >= 8 ? 4 : 2;
  const auto code = codes::concatenated_code(code_m / c, c);
  Rng rng(p.seed);
  BitString x(code.n());
  for (std::size_t i = 0; i < code.n(); ++i) x.set(i, rng.bit());
  const auto target = fingerprint::build_fingerprint(code, x);
  const auto cbe = complexity::cbe_upper(target.state, p.eps);
  l.i_fin = static_cast<double>(cbe.cbe_upper_bits);
  l.surrogate_method = cbe.method_id;
  return l;
}

nlohmann::json MultiphotonComparison::to_json() const {
  return {{"product", product.to_json()},
          {"entangled", entangled.to_json()},
          {"entangled_exceeds_product", entangled_exceeds_product}};
}

MultiphotonComparison multiphoton_comparison(const MultiphotonParams& params) {
  MultiphotonParams p = params;
  MultiphotonComparison out;
  p.strategy = Strategy::kProduct;
  out.product = multiphoton_ledger(p);
  p.strategy = Strategy::kEntangled;
  out.entangled = multiphoton_ledger(p);
  out.entangled_exceeds_product = out.entangled.delta_total() > out.product.delta_total();
  return out;
}

std::string to_string(Setting s) {
  switch (s) {
    case Setting::kSingle:
      return "single";
    case Setting::kMultiProduct:
      return "multi-product";
    case Setting::kMultiProjection:
      break;
  }
  return "multi-projection";
}

Setting setting_from_string(const std::string& name) {
  if (name == "single") return Setting::kSingle;
  if (name == "multi-product") return Setting::kMultiProduct;
  if (name == "multi-projection") return Setting::kMultiProjection;
  throw InputError("unknown setting '" + name +
                   "' (expected single, multi-product, multi-projection)");
}

nlohmann::json BackgroundReport::to_json() const {
  return {{"setting", to_string(setting)},
          {"n", n},
          {"m", m},
          {"descriptor_bits", descriptor_bits},
          {"descriptor_compressed_bits", descriptor_compressed_bits},
          {"target_raw_cbe_bits", target_raw_cbe_bits},
          {"target_cbe_bits", target_cbe_bits},
          {"method_id", method_id}};
}

BackgroundReport background_information_report(Setting setting, std::size_t n, std::size_t m,
                                               double eps, std::uint64_t seed) {
  if (m < 1 || m > 0xffffffffULL) throw InputError("m must lie in [1, 2^32)");
  BackgroundReport r;
  r.setting = setting;
  r.n = setting == Setting::kSingle ? 1 : n;
  r.m = m;
  r.method_id = codes::kCompressorMethodId;
  BitString descriptor;
  descriptor.append_uint(static_cast<std::uint64_t>(setting), 8);
  descriptor.append_uint(m, 32);
  if (setting != Setting::kSingle) {
    if (n < 1 || n > 0xffffffffULL) throw InputError("n must lie in [1, 2^32)");
    descriptor.append_uint(n, 32);
  }
  if (setting == Setting::kMultiProjection) {
    if (n > static_cast<std::size_t>(qsim::kMaxStateQubits)) {
      throw CapError("projection target exceeds the 20-qubit cap");
    }
    Rng rng(seed);
    const auto target = qsim::StateVector::haar_random(static_cast<int>(n), rng);
    const auto d = fingerprint::quantize_state(target, eps);
    const BitString packed = codes::compress(d.bits);
    r.target_raw_cbe_bits = d.length_bits();
    r.target_cbe_bits = packed.size();
    descriptor.append(packed);
  }
  r.descriptor_bits = descriptor.size();
  r.descriptor_compressed_bits = codes::kcl_upper(descriptor).compressed_length_bits;
  return r;
}

}  // namespace qkolab::demon
