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

#include "qkolab/fingerprint.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <vector>

#include "qkolab/errors.hpp"
#include "qkolab/measures.hpp"

namespace qkolab::fingerprint {
namespace {

void check_message(const LinearCode& code, const BitString& x) {
  if (x.size() != code.n()) {
    throw InputError("message has " + std::to_string(x.size()) + " bits, code expects " +
                     std::to_string(code.n()));
  }
}

int index_qubits_for(const LinearCode& code) {
  const auto k = static_cast<int>(codes::bits_for(code.m()));
  if (k + 1 > qsim::kMaxStateQubits) {
    throw CapError("fingerprint needs " + std::to_string(k + 1) + " qubits, cap is " +
                   std::to_string(qsim::kMaxStateQubits));
  }
  return k;
}

StateVector fingerprint_of_word(const BitString& word, int k) {
  std::vector<qsim::cplx> amps(std::size_t{2} << k);
  const double a = 1.0 / std::sqrt(static_cast<double>(word.size()));
  for (std::size_t i = 0; i < word.size(); ++i) amps[(i << 1) | (word[i] ? 1U : 0U)] = a;
  return StateVector::from_amplitudes(std::move(amps));
}

// X on `target` controlled by all of `controls`, via a ladder of Toffolis
// through clean work qubits.
void multi_controlled_x(Circuit& c, const std::vector<int>& controls, int target, int first_work) {
  const std::size_t n = controls.size();
  if (n == 0) {
    c.x(target);
    return;
  }
  if (n == 1) {
    c.cnot(controls[0], target);
    return;
  }
  if (n == 2) {
    c.toffoli(controls[0], controls[1], target);
    return;
  }
  std::vector<std::pair<int, int>> ladder;  // (control, work) feeding each rung
  c.toffoli(controls[0], controls[1], first_work);
  for (std::size_t j = 2; j + 1 < n; ++j) {
    const int work = first_work + static_cast<int>(j) - 1;
    c.toffoli(controls[j], work - 1, work);
    ladder.emplace_back(static_cast<int>(controls[j]), work);
  }
  c.toffoli(controls[n - 1], first_work + static_cast<int>(n) - 3, target);
  for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) {
    c.toffoli(it->first, it->second - 1, it->second);
  }
  c.toffoli(controls[0], controls[1], first_work);
}

}  // namespace

Fingerprint build_fingerprint(const LinearCode& code, const BitString& x) {
  check_message(code, x);
  const int k = index_qubits_for(code);
  BitString word = code.encode(x);
  StateVector state = fingerprint_of_word(word, k);
  return {x, std::move(word), k, std::move(state)};
}

double overlap(const LinearCode& code, const BitString& x, const BitString& y) {
  check_message(code, x);
  check_message(code, y);
  const std::size_t disagree = codes::hamming_distance(code.encode(x), code.encode(y));
  return static_cast<double>(code.m() - disagree) / static_cast<double>(code.m());
}

HxCircuit build_hx_circuit(const LinearCode& code, const BitString& x) {
  check_message(code, x);
  const std::size_t m = code.m();
  if (!std::has_single_bit(m)) {
    throw InputError("circuit construction needs m to be a power of two, got m=" +
                     std::to_string(m));
  }
  const int k = std::countr_zero(m);
  if (k > kMaxCircuitIndexQubits) {
    throw CapError("circuit construction supports m <= 2^6, got m=" + std::to_string(m));
  }
  const int work = k >= 3 ? k - 2 : 0;
  HxCircuit hx{Circuit(k + 1 + work), k, work, kMcxDecompositionId};
  Circuit& c = hx.circuit;
  for (int j = 0; j < k; ++j) c.h(j);
  const BitString word = code.encode(x);
  std::vector<int> controls;
  for (int j = 0; j < k; ++j) controls.push_back(j);
  for (std::size_t i = 0; i < m; ++i) {
    if (!word[i]) continue;
    for (int j = 0; j < k; ++j) {
      if (!((i >> (k - 1 - j)) & 1U)) c.x(j);
    }
    multi_controlled_x(c, controls, k, k + 1);
    for (int j = 0; j < k; ++j) {
      if (!((i >> (k - 1 - j)) & 1U)) c.x(j);
    }
  }
  return hx;
}

StateVector data_register(const HxCircuit& hx, const StateVector& full) {
  if (full.q() != hx.circuit.q()) throw InputError("state does not match the circuit width");
  const std::size_t work_dim = std::size_t{1} << hx.work_qubits;
  std::vector<qsim::cplx> amps(full.dim() / work_dim);
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = full[i * work_dim];
  return StateVector::from_amplitudes(std::move(amps));
}

std::string to_string(ExtractionStatus status) {
  switch (status) {
    case ExtractionStatus::kExact:
      return "exact";
    case ExtractionStatus::kCorrected:
      return "corrected";
    case ExtractionStatus::kNotACodeword:
      break;
  }
  return "not_a_codeword";
}

ExtractionResult extract_codeword(const StateVector& state, const LinearCode& code,
                                  const ExtractionOptions& options) {
  const int k = index_qubits_for(code);
  if (state.q() != k + 1) {
    throw InputError("extraction expects a " + std::to_string(k + 1) + "-qubit state, got " +
                     std::to_string(state.q()));
  }
  const std::size_t m = code.m();
  ExtractionResult result{BitString(m), ExtractionStatus::kNotACodeword, std::nullopt};
  bool readable = true;
  for (std::size_t i = 0; i < m; ++i) {
    const double mass0 = std::norm(state[i << 1]);
    const double mass1 = std::norm(state[(i << 1) | 1U]);
    if (mass0 == mass1) {
      readable = false;
      continue;
    }
    result.word.set(i, mass1 > mass0);
  }
  if (!readable) return result;

  auto accept = [&](const BitString& word, ExtractionStatus status) {
    auto msg = code.message_of(word);
    if (!msg) return false;
    if (options.min_fidelity &&
        qsim::fidelity(fingerprint_of_word(word, k), state) < *options.min_fidelity) {
      return false;
    }
    result.word = word;
    result.status = status;
    result.message = std::move(msg);
    return true;
  };
  if (accept(result.word, ExtractionStatus::kExact)) return result;

  if (options.correct && code.n() <= codes::kExhaustiveMaxMessageBits) {
    const auto& v = code.verification();
    const std::size_t min_distance =
        v && v->mode == codes::VerificationMode::kExhaustive
            ? v->min_distance
            : codes::verify_distance(code, codes::DistanceCheck::exhaustive()).min_distance;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::optional<BitString> nearest;
    const std::size_t count = std::size_t{1} << code.n();
    for (std::size_t msg = 0; msg < count; ++msg) {
      BitString candidate = code.encode(BitString::from_uint(msg, code.n()));
      const std::size_t d = codes::hamming_distance(candidate, result.word);
      if (d < best) {
        best = d;
        nearest = std::move(candidate);
      }
    }
    if (2 * best < min_distance && accept(*nearest, ExtractionStatus::kCorrected)) return result;
  }
  return result;
}

double exclusion_fidelity(double delta, double eps) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw InputError("delta must lie in [0, 1]");
  if (!(eps >= 0.0 && eps <= 1.0)) throw InputError("eps must lie in [0, 1]");
  const double gap = std::acos(delta) - std::acos(std::sqrt(1.0 - eps));
  if (gap <= 0.0) return std::numeric_limits<double>::infinity();
  const double c = std::cos(gap);
  // A wrong codeword can sit exactly on c^2; acceptance is >=, so step past it.
  return c * c + tol::kAnalytic;
}

StateVector perturb_to_fidelity(const StateVector& s, double fidelity, Rng& rng) {
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) throw InputError("fidelity must lie in [0, 1]");
  if (s.dim() < 2) throw InputError("cannot perturb a one-dimensional state");
  std::vector<qsim::cplx> v = StateVector::haar_random(s.q(), rng).amplitudes();
  const qsim::cplx proj = qsim::inner(s, StateVector::from_amplitudes(v));
  double n2 = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] -= proj * s[i];
    n2 += std::norm(v[i]);
  }
  const double scale = std::sqrt(1.0 - fidelity) / std::sqrt(n2);
  const double keep = std::sqrt(fidelity);
  std::vector<qsim::cplx> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = keep * s[i] + scale * v[i];
  return StateVector::from_amplitudes(std::move(out), true);
}

}  // namespace qkolab::fingerprint
