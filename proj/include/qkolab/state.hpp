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

#ifndef QKOLAB_STATE_HPP_
#define QKOLAB_STATE_HPP_

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "qkolab/random.hpp"

namespace qkolab::qsim {

using cplx = std::complex<double>;

inline constexpr int kMaxStateQubits = 20;
inline constexpr int kMaxDensityQubits = 10;

/// Pure state on q qubits. Qubit 0 is the most significant bit of the basis
/// index.
class StateVector {
 public:
  /// |0...0>.
  static StateVector zero(int q);
  static StateVector basis(int q, std::uint64_t index);
  /// Length must be a power of two. Unless `normalize` is set, the norm must
  /// already be 1 within tol::kNorm.
  static StateVector from_amplitudes(std::vector<cplx> amplitudes, bool normalize = false);
  static StateVector haar_random(int q, Rng& rng);

  int q() const { return q_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<cplx>& amplitudes() const { return amplitudes_; }
  cplx operator[](std::size_t i) const { return amplitudes_[i]; }

  /// this (x) other; this state's qubits come first.
  StateVector tensor(const StateVector& other) const;

  /// [[re, im], ...] in basis order.
  nlohmann::json to_json() const;
  static StateVector from_json(const nlohmann::json& j);

  // In-place access for the simulator; callers keep the norm.
  std::vector<cplx>& mutable_amplitudes() { return amplitudes_; }

 private:
  StateVector(int q, std::vector<cplx> amplitudes) : q_(q), amplitudes_(std::move(amplitudes)) {}

  int q_ = 0;
  std::vector<cplx> amplitudes_;
};

/// <a|b>. Throws InputError on dimension mismatch.
cplx inner(const StateVector& a, const StateVector& b);

/// Mixed state on q <= 10 qubits, validated Hermitian, unit trace and PSD.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(Eigen::MatrixXcd matrix);
  static DensityMatrix from_pure(const StateVector& s);
  static DensityMatrix maximally_mixed(int q);
  /// Random state of the given rank: partial trace of a Haar-random
  /// purification.
  static DensityMatrix random(int q, int rank, Rng& rng);

  int q() const { return q_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  DensityMatrix(int q, Eigen::MatrixXcd matrix) : q_(q), matrix_(std::move(matrix)) {}

  int q_ = 0;
  Eigen::MatrixXcd matrix_;
};

}  // namespace qkolab::qsim

#endif  // QKOLAB_STATE_HPP_
