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

#ifndef QKOLAB_MEASURES_HPP_
#define QKOLAB_MEASURES_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "qkolab/circuit.hpp"
#include "qkolab/compressor.hpp"
#include "qkolab/state.hpp"

namespace qkolab::qsim {

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

struct OutcomeDistribution {
  double p0 = 0.0;
  double p1 = 0.0;
};

/// Closed form: P(0) = (1 + |<a|b>|^2) / 2.
OutcomeDistribution swap_test(const StateVector& a, const StateVector& b);

/// Circuit on 2q+1 qubits: ancilla 0, a on 1..q, b on q+1..2q. H on the
/// ancilla, a controlled swap per qubit pair (CNOT, Toffoli, CNOT), H again.
Circuit swap_test_circuit(int q);

/// Simulates swap_test_circuit on |0>|a>|b> and reads the ancilla marginal.
OutcomeDistribution swap_test_simulated(const StateVector& a, const StateVector& b);

/// One draw from the closed form: 0 iff u < P(0).
int swap_test_sample(const StateVector& a, const StateVector& b, Rng& rng);

/// Reduced state on `keep` (sorted ascending internally; qubit order of the
/// result follows the sorted order).
DensityMatrix partial_trace(const StateVector& s, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& r, std::span<const int> keep);

/// tr sqrt(sqrt(r) s sqrt(r)), computed by eigendecomposition.
double uhlmann_fidelity(const DensityMatrix& r, const DensityMatrix& s);

/// Number of singular values above tol::kSingularValue across the cut
/// `partition` | rest.
int schmidt_rank(const StateVector& s, std::span<const int> partition);

/// Tetrahedral single-qubit IC-POVM: M_k = (I + n_k . sigma) / 4.
struct TetrahedralPovm {
  static const double kDirections[4][3];
  static Eigen::Matrix2cd element(int k);
};

/// Outcome distribution of the tensor-power tetrahedral POVM on the reduced
/// state of `qubits` (all qubits when empty). Outcome index is base 4 with
/// the lowest-numbered measured qubit most significant. At most 8 qubits.
std::vector<double> povm_outcome_distribution(const StateVector& s,
                                              std::span<const int> qubits = {});

/// Distribution and the complexity surrogate of its 32-bit fixed-point
/// serialization (round(p * 2^32), saturating).
struct PovmReport {
  std::vector<double> probabilities;
  codes::ComplexitySurrogate description;
};
PovmReport povm_report(const StateVector& s, std::span<const int> qubits = {});

/// Orthonormal measurement basis for a state of dimension dim.
class MeasurementBasis {
 public:
  static MeasurementBasis computational(std::size_t dim);
  /// Vectors must be orthonormal within tol::kNorm and complete.
  static MeasurementBasis from_vectors(std::vector<std::vector<cplx>> vectors);

  bool is_computational() const { return vectors_.empty(); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::vector<cplx>>& vectors() const { return vectors_; }
  /// |<b_k|s>|^2 for all k.
  std::vector<double> probabilities(const StateVector& s) const;
  /// <b_k|r|b_k> for all k.
  std::vector<double> probabilities(const DensityMatrix& r) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<cplx>> vectors_;
};

/// Samples an outcome index; one uniform draw per call.
std::size_t sample_measurement(const StateVector& s, const MeasurementBasis& basis, Rng& rng);
std::size_t sample_measurement(const StateVector& s, const MeasurementBasis& basis,
                               std::uint64_t seed);
std::size_t sample_measurement(const DensityMatrix& r, const MeasurementBasis& basis, Rng& rng);

/// Index of the first cumulative bucket exceeding u.
std::size_t sample_index(std::span<const double> probabilities, double u);

}  // namespace qkolab::qsim

#endif  // QKOLAB_MEASURES_HPP_
