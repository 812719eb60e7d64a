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

#include "qkolab/smp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qkolab/errors.hpp"
#include "qkolab/fingerprint.hpp"
#include "qkolab/measures.hpp"
#include "qkolab/parallel.hpp"
#include "qkolab/quantized.hpp"
#include "qkolab/random.hpp"

namespace qkolab::smp {

std::string to_string(Party p) { return p == Party::kAlice ? "alice" : "bob"; }

std::string to_string(Decision d) {
  switch (d) {
    case Decision::kEqual:
      return "equal";
    case Decision::kNotEqual:
      return "not_equal";
    case Decision::kRestart:
      break;
  }
  return "restart";
}

std::string to_string(SimulationMode mode) {
  return mode == SimulationMode::kThreshold ? "threshold" : "sampled";
}

std::string to_string(Protocol p) {
  switch (p) {
    case Protocol::kClassical:
      return "classical";
    case Protocol::kQuantum:
      return "quantum";
    case Protocol::kClassicalSim:
      break;
  }
  return "classical-sim";
}

Protocol protocol_from_string(const std::string& name) {
  if (name == "classical") return Protocol::kClassical;
  if (name == "quantum") return Protocol::kQuantum;
  if (name == "classical-sim") return Protocol::kClassicalSim;
  throw InputError("unknown protocol '" + name + "' (expected classical, quantum, classical-sim)");
}

std::string to_string(InputMode m) {
  switch (m) {
    case InputMode::kUnequal:
      return "unequal";
    case InputMode::kEqual:
      return "equal";
    case InputMode::kMixed:
      break;
  }
  return "mixed";
}

InputMode input_mode_from_string(const std::string& name) {
  if (name == "unequal") return InputMode::kUnequal;
  if (name == "equal") return InputMode::kEqual;
  if (name == "mixed") return InputMode::kMixed;
  throw InputError("unknown input mode '" + name + "' (expected unequal, equal, mixed)");
}

nlohmann::json to_json(const Transcript& t) {
  nlohmann::json messages = nlohmann::json::array();
  for (const Message& m : t.messages) {
    nlohmann::json j = {
        {"party", to_string(m.party)}, {"payload_bits", m.payload.size()}, {"qubits", m.qubits}};
    if (m.payload.size() <= 1024) j["payload"] = m.payload.to_string();
    messages.push_back(std::move(j));
  }
  return {{"messages", messages},      {"classical_bits", t.classical_bits},
          {"qubits", t.qubits},        {"decision", to_string(t.decision)},
          {"rounds", t.rounds},        {"outcomes", t.outcomes},
          {"collisions", t.collisions}};
}

namespace {

void check_inputs(const BitString& x, const BitString& y, const LinearCode& code) {
  if (x.size() != code.n() || y.size() != code.n()) {
    throw InputError("inputs must have n=" + std::to_string(code.n()) + " bits");
  }
}

void finish(Transcript& t) {
  t.classical_bits = 0;
  t.qubits = 0;
  for (const Message& m : t.messages) {
    t.classical_bits += m.payload.size();
    t.qubits += m.qubits;
  }
}

int fingerprint_qubits(const LinearCode& code) {
  return static_cast<int>(codes::bits_for(code.m())) + 1;
}

double required_delta(const LinearCode& code) {
  const auto delta = code.delta_verified();
  if (!delta) throw InputError("protocol needs a code with verified delta");
  return *delta;
}

}  // namespace

std::size_t multi_index_count(std::size_t m, double delta_target) {
  if (!(delta_target > 0.0 && delta_target < 1.0)) {
    throw InputError("delta_target must lie in (0, 1)");
  }
  return static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(m) * std::log(2.0 / delta_target))));
}

Transcript run_classical_equality(const BitString& x, const BitString& y, const LinearCode& code,
                                  const ClassicalVariant& variant, std::uint64_t seed) {
  check_inputs(x, y, code);
  const std::size_t m = code.m();
  const std::size_t index_bits = codes::bits_for(m);
  const std::size_t s = variant.kind == ClassicalVariant::Kind::kSingleIndex ? 1 : variant.s;
  if (s == 0) throw InputError("multi-index protocol needs s >= 1");
  const BitString ex = code.encode(x);
  const BitString ey = code.encode(y);
  Rng rng(seed);

  Transcript t;
  std::vector<std::size_t> alice(s);
  std::vector<std::size_t> bob(s);
  for (auto& i : alice) i = rng.below(m);
  for (auto& j : bob) j = rng.below(m);
  for (int side = 0; side < 2; ++side) {
    Message msg{side == 0 ? Party::kAlice : Party::kBob, {}, 0};
    const auto& indices = side == 0 ? alice : bob;
    const BitString& word = side == 0 ? ex : ey;
    for (std::size_t i : indices) {
      msg.payload.append_uint(i, index_bits);
      msg.payload.push_back(word[i]);
    }
    t.messages.push_back(std::move(msg));
  }
  bool all_agree = true;
  for (std::size_t i : alice) {
    for (std::size_t j : bob) {
      if (i != j) continue;
      ++t.collisions;
      if (ex[i] != ey[j]) all_agree = false;
    }
  }
  if (t.collisions == 0) {
    t.decision = Decision::kRestart;
  } else {
    t.decision = all_agree ? Decision::kEqual : Decision::kNotEqual;
  }
  finish(t);
  return t;
}

Transcript run_quantum_equality(const BitString& x, const BitString& y, const LinearCode& code,
                                int k, std::uint64_t seed) {
  check_inputs(x, y, code);
  if (k < 1) throw InputError("number of copies k must be >= 1");
  const int q = fingerprint_qubits(code);
  if (2 * q + 1 > qsim::kMaxStateQubits) {
    throw CapError("SWAP test on " + std::to_string(q) + "-qubit fingerprints needs " +
                   std::to_string(2 * q + 1) + " qubits, cap is 20");
  }
  const auto hx = fingerprint::build_fingerprint(code, x);
  const auto hy = fingerprint::build_fingerprint(code, y);
  const double p0 = qsim::swap_test(hx.state, hy.state).p0;
  Rng rng(seed);
  Transcript t;
  t.messages.push_back({Party::kAlice, {}, static_cast<std::size_t>(k * q)});
  t.messages.push_back({Party::kBob, {}, static_cast<std::size_t>(k * q)});
  bool all_zero = true;
  for (int r = 0; r < k; ++r) {
    const int outcome = rng.uniform() < p0 ? 0 : 1;
    t.outcomes.push_back(outcome);
    if (outcome) all_zero = false;
  }
  t.decision = all_zero ? Decision::kEqual : Decision::kNotEqual;
  finish(t);
  return t;
}

Transcript run_classical_simulation_of_quantum(const BitString& x, const BitString& y,
                                               const LinearCode& code, double eps_a,
                                               SimulationMode mode, int k, std::uint64_t seed) {
  return run_classical_simulation_with_bits(x, y, code, fingerprint::component_bits_for(eps_a),
                                            mode, k, seed);
}

Transcript run_classical_simulation_with_bits(const BitString& x, const BitString& y,
                                              const LinearCode& code, int p, SimulationMode mode,
                                              int k, std::uint64_t seed) {
  check_inputs(x, y, code);
  if (k < 1) throw InputError("number of rounds k must be >= 1");
  const double delta = required_delta(code);
  const auto dx =
      fingerprint::quantize_state_bits(fingerprint::build_fingerprint(code, x).state, p);
  const auto dy =
      fingerprint::quantize_state_bits(fingerprint::build_fingerprint(code, y).state, p);
  Transcript t;
  t.messages.push_back({Party::kAlice, dx.bits, 0});
  t.messages.push_back({Party::kBob, dy.bits, 0});
  const double o =
      std::abs(qsim::inner(fingerprint::decode_state(dx), fingerprint::decode_state(dy)));
  if (mode == SimulationMode::kThreshold) {
    t.decision = o >= (1.0 + delta) / 2.0 ? Decision::kEqual : Decision::kNotEqual;
  } else {
    const double p0 = (1.0 + std::min(1.0, o * o)) / 2.0;
    Rng rng(seed);
    bool all_zero = true;
    for (int r = 0; r < k; ++r) {
      const int outcome = rng.uniform() < p0 ? 0 : 1;
      t.outcomes.push_back(outcome);
      if (outcome) all_zero = false;
    }
    t.decision = all_zero ? Decision::kEqual : Decision::kNotEqual;
  }
  finish(t);
  return t;
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j = {{"n", n},
                      {"code", code},
                      {"protocol", to_string(protocol)},
                      {"trials", trials},
                      {"seed", master_seed},
                      {"k", k},
                      {"inputs", to_string(inputs)}};
  if (code == "concatenated") j["c"] = rate_c;
  if (protocol == Protocol::kClassical) {
    j["variant"] = s == 0 ? "single_index" : "multi_index";
    if (s != 0) j["s"] = s;
  }
  if (protocol == Protocol::kClassicalSim) {
    j["eps_a"] = eps_a;
    j["p"] = fingerprint::component_bits_for(eps_a);
    j["sim_mode"] = to_string(sim_mode);
  }
  return j;
}

Interval wilson_interval(std::size_t successes, std::size_t n, double z) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double phat = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (phat + z2 / (2.0 * nn)) / denom;
  const double half = z / denom * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

nlohmann::json ErrorReport::to_json() const {
  const auto rate = [](std::size_t a, std::size_t b) {
    return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
  };
  nlohmann::json j = {
      {"config", config.to_json()},
      {"trials", trials},
      {"decided", decided},
      {"restarts", restarts},
      {"restart_rate", rate(restarts, trials)},
      {"error_rate", error_rate},
      {"wilson_99", {wilson_99.lo, wilson_99.hi}},
      {"mean_bits", mean_bits},
      {"mean_qubits", mean_qubits},
      {"per_direction_errors",
       {{"false_equal", false_equal},
        {"false_equal_rate", rate(false_equal, decided_unequal_inputs)},
        {"decided_unequal_inputs", decided_unequal_inputs},
        {"false_not_equal", false_not_equal},
        {"false_not_equal_rate", rate(false_not_equal, decided_equal_inputs)},
        {"decided_equal_inputs", decided_equal_inputs}}},
  };
  if (config.protocol == Protocol::kClassical) {
    j["collision_trials"] = collision_trials;
    j["collision_rate"] = rate(collision_trials, trials);
  }
  if (analytic_error_rate >= 0.0) j["analytic_error_rate"] = analytic_error_rate;
  if (!transcripts.empty()) {
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& t : transcripts) ts.push_back(smp::to_json(t));
    j["transcripts"] = ts;
  }
  return j;
}

ErrorReport monte_carlo(const ExperimentConfig& config) {
  if (config.trials < 1) throw InputError("trials must be >= 1");
  const LinearCode code = codes::code_by_name(config.code, config.n, config.rate_c);
  if (config.protocol == Protocol::kQuantum) {
    const int q = fingerprint_qubits(code);
    if (2 * q + 1 > qsim::kMaxStateQubits) {
      throw CapError("quantum protocol needs " + std::to_string(2 * q + 1) +
                     "-qubit SWAP tests, cap is 20");
    }
  }
  if (config.protocol == Protocol::kClassicalSim) {
    fingerprint::component_bits_for(config.eps_a);
    required_delta(code);
  }

  struct Outcome {
    bool equal_inputs = false;
    Decision decision = Decision::kRestart;
    std::size_t bits = 0;
    std::size_t qubits = 0;
    bool collision = false;
    double wrong_probability = 0.0;
  };
  std::vector<Outcome> outcomes(config.trials);
  std::vector<Transcript> kept(config.trials == 1 ? 1 : 0);
  const ClassicalVariant variant =
      config.s == 0 ? ClassicalVariant::single_index() : ClassicalVariant::multi_index(config.s);

  parallel_for(config.trials, [&](std::size_t i) {
    Rng rng(derive_seed(config.master_seed, i));
    BitString x(config.n);
    for (std::size_t b = 0; b < config.n; ++b) x.set(b, rng.bit());
    bool equal = config.inputs == InputMode::kEqual;
    if (config.inputs == InputMode::kMixed) equal = rng.bit();
    BitString y = x;
    if (!equal) {
      while (y == x) {
        for (std::size_t b = 0; b < config.n; ++b) y.set(b, rng.bit());
      }
    }
    const std::uint64_t seed = rng.next_u64();
    Transcript t;
    switch (config.protocol) {
      case Protocol::kClassical:
        t = run_classical_equality(x, y, code, variant, seed);
        break;
      case Protocol::kQuantum:
        t = run_quantum_equality(x, y, code, config.k, seed);
        break;
      case Protocol::kClassicalSim:
        t = run_classical_simulation_of_quantum(x, y, code, config.eps_a, config.sim_mode, config.k,
                                                seed);
        break;
    }
    Outcome& o = outcomes[i];
    o.equal_inputs = equal;
    o.decision = t.decision;
    o.bits = t.classical_bits;
    o.qubits = t.qubits;
    o.collision = t.collisions > 0;
    if (config.protocol == Protocol::kQuantum && !equal) {
      const double ov = fingerprint::overlap(code, x, y);
      o.wrong_probability = std::pow((1.0 + ov * ov) / 2.0, config.k);
    }
    if (config.trials == 1) kept[0] = std::move(t);
  });

  ErrorReport r;
  r.config = config;
  r.trials = config.trials;
  r.transcripts = std::move(kept);
  double bits = 0.0;
  double qubits = 0.0;
  double wrong = 0.0;
  for (const Outcome& o : outcomes) {
    bits += static_cast<double>(o.bits);
    qubits += static_cast<double>(o.qubits);
    (o.equal_inputs ? r.equal_input_trials : r.unequal_input_trials) += 1;
    if (o.collision) ++r.collision_trials;
    wrong += o.wrong_probability;
    if (o.decision == Decision::kRestart) {
      ++r.restarts;
      continue;
    }
    ++r.decided;
    if (o.equal_inputs) {
      ++r.decided_equal_inputs;
      if (o.decision == Decision::kNotEqual) ++r.false_not_equal;
    } else {
      ++r.decided_unequal_inputs;
      if (o.decision == Decision::kEqual) ++r.false_equal;
    }
  }
  const std::size_t errors = r.false_equal + r.false_not_equal;
  r.error_rate =
      r.decided == 0 ? 0.0 : static_cast<double>(errors) / static_cast<double>(r.decided);
  r.wilson_99 = wilson_interval(errors, r.decided);
  r.mean_bits = bits / static_cast<double>(r.trials);
  r.mean_qubits = qubits / static_cast<double>(r.trials);
  if (config.protocol == Protocol::kQuantum && r.unequal_input_trials > 0) {
    r.analytic_error_rate = wrong / static_cast<double>(r.unequal_input_trials);
  }
  return r;
}

std::vector<CommunicationRow> communication_report(std::size_t n_min, std::size_t n_max, int p,
                                                   int k) {
  if (n_min < 1 || n_max < n_min)
    throw InputError("communication_report: need 1 <= n_min <= n_max");
  if (n_max + 1 > static_cast<std::size_t>(qsim::kMaxStateQubits)) {
    throw CapError("communication_report: n + 1 must not exceed 20 qubits");
  }
  if (p < 2 || p > fingerprint::kMaxComponentBits) throw InputError("p must lie in [2, 62]");
  if (k < 1) throw InputError("k must be >= 1");
  std::vector<CommunicationRow> rows;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const int q = static_cast<int>(n) + 1;
    const std::size_t qubits = 2 * static_cast<std::size_t>(k) * static_cast<std::size_t>(q);
    const std::size_t sim_bits = 2 * fingerprint::quantized_length_bits(q, p);
    const double ratio = std::log2(static_cast<double>(sim_bits)) / static_cast<double>(qubits);
    rows.push_back({"quantum", n, q, 0, qubits, ratio});
    rows.push_back({"classical-sim", n, q, sim_bits, 0, ratio});
    rows.push_back({"classical", n, q, 2 * (n + 1), 0, ratio});
  }
  return rows;
}

}  // namespace qkolab::smp
