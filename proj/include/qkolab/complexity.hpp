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

#ifndef QKOLAB_COMPLEXITY_HPP_
#define QKOLAB_COMPLEXITY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qkolab/circuit.hpp"
#include "qkolab/circuit_encoding.hpp"
#include "qkolab/compressor.hpp"
#include "qkolab/linear_code.hpp"
#include "qkolab/state.hpp"

namespace qkolab::complexity {

using qsim::DensityMatrix;
using qsim::StateVector;

struct ComplexityReport {
  std::string subject;
  std::size_t raw_bits = 0;
  std::size_t knet_upper_bits = 0;
  std::size_t cbe_upper_bits = 0;
  /// Encoding that achieved knet_upper_bits (flat or compact).
  int encoding_version = 0;
  double eps = 0.0;
  std::string method_id = codes::kCompressorMethodId;

  nlohmann::json to_json() const;
};

/// Compressed length of the circuit's encoding, the smaller over the flat
/// and compact forms. raw_bits is the flat encoding length. Never exceeds
/// raw_bits + kCompressorHeaderBits.
ComplexityReport knet_upper(const Circuit& c);

/// Compressed length of the quantized amplitude list at precision eps_a.
/// raw_bits = 2^(q+1) p + 64.
ComplexityReport cbe_upper(const StateVector& s, double eps_a);
ComplexityReport cbe_upper_bits(const StateVector& s, int p);

/// sum_i sqrt(p_i) |u_i>|u_i> over the eigenpairs of r (2q qubits).
/// Eigenvector phases are fixed so the largest component is real positive.
StateVector purify(const DensityMatrix& r);

struct PurificationCandidate {
  std::string name;
  Circuit circuit;
  /// Qubits of the circuit that carry the system; the rest is reference.
  std::vector<int> system_qubits;
};

struct CandidateResult {
  std::string name;
  double uhlmann_fidelity = 0.0;
  bool admitted = false;
  std::size_t knet_upper_bits = 0;
};

struct MixedComplexityResult {
  std::size_t bits = 0;
  std::string best;
  std::vector<CandidateResult> candidates;
};

/// Minimum knet_upper over candidates whose reduced state has F^2 >= 1 - eps.
/// Throws InputError when no candidate qualifies.
MixedComplexityResult mixed_complexity_upper(const DensityMatrix& r,
                                             const std::vector<PurificationCandidate>& candidates,
                                             double eps);

/// 2n qubits; H(2i) then CNOT(2i, 2i+1) for each pair i. n <= 2^15.
Circuit bell_pair_circuit(std::size_t n);

/// a * t^b + d.
struct PolyBound {
  double a = 64.0;
  double b = 1.0;
  double d = 512.0;
  double at(std::size_t t) const;
};

struct StepReport {
  std::size_t t = 0;
  std::size_t knet_upper_bits = 0;
  double bound_bits = 0.0;
  bool exceeds = false;
};

/// knet_upper of every prefix of length 1..size.
std::vector<StepReport> track_stepwise(const Circuit& c, const PolyBound& bound = {});

struct CorpusEntry {
  std::string family;
  codes::BitString x;
  std::size_t kx_bits = 0;
  std::size_t kex_bits = 0;
};

struct Observation1Report {
  std::vector<CorpusEntry> entries;
  double spearman = 0.0;
  std::string method_id = codes::kCompressorMethodId;

  nlohmann::json to_json() const;
};

/// Families cycle: short-period, long-period, biased Bernoulli, uniform.
std::vector<CorpusEntry> make_corpus(std::size_t n, std::size_t size, std::uint64_t seed);

/// Pairs (kcl_upper(x), kcl_upper(E(x))) and their Spearman correlation.
/// Throws InputError for corpora below 50 strings.
Observation1Report observation1_experiment(const codes::LinearCode& code, std::size_t corpus_size,
                                           std::uint64_t seed);

/// Rank correlation with average ranks for ties; 0 when either side is
/// constant.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace qkolab::complexity

#endif  // QKOLAB_COMPLEXITY_HPP_
