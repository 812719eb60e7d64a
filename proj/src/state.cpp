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

#include "qkolab/state.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qkolab/errors.hpp"

namespace qkolab::qsim {
namespace {

void check_qubits(int q, int cap, const char* what) {
  if (q < 0) throw InputError(std::string(what) + ": negative qubit count");
  if (q > cap) {
    throw CapError(std::string(what) + ": " + std::to_string(q) + " qubits exceeds the cap of " +
                   std::to_string(cap));
  }
}

double squared_norm(const std::vector<cplx>& v) {
  double sum = 0.0;
  for (const cplx& a : v) sum += std::norm(a);
  return sum;
}

}  // namespace

StateVector StateVector::zero(int q) { return basis(q, 0); }

StateVector StateVector::basis(int q, std::uint64_t index) {
  check_qubits(q, kMaxStateQubits, "state vector");
  std::vector<cplx> amps(std::size_t{1} << q);
  if (index >= amps.size()) throw InputError("basis index out of range");
  amps[index] = 1.0;
  return {q, std::move(amps)};
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes, bool normalize) {
  const std::size_t dim = amplitudes.size();
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw InputError("state vector length " + std::to_string(dim) + " is not a power of two");
  }
  const int q = std::countr_zero(dim);
  check_qubits(q, kMaxStateQubits, "state vector");
  const double n2 = squared_norm(amplitudes);
  if (!std::isfinite(n2)) throw InputError("state vector has non-finite amplitudes");
  if (normalize) {
    if (n2 == 0.0) throw InputError("cannot normalize the zero vector");
    const double scale = 1.0 / std::sqrt(n2);
    for (cplx& a : amplitudes) a *= scale;
  } else if (std::abs(std::sqrt(n2) - 1.0) > tol::kNorm) {
    throw InputError("state vector norm " + std::to_string(std::sqrt(n2)) + " is not 1");
  }
  return {q, std::move(amplitudes)};
}

StateVector StateVector::haar_random(int q, Rng& rng) {
  check_qubits(q, kMaxStateQubits, "state vector");
  std::vector<cplx> amps(std::size_t{1} << q);
  for (cplx& a : amps) {
    const double re = rng.normal();
    const double im = rng.normal();
    a = {re, im};
  }
  return from_amplitudes(std::move(amps), true);
}

StateVector StateVector::tensor(const StateVector& other) const {
  check_qubits(q_ + other.q_, kMaxStateQubits, "tensor product");
  std::vector<cplx> amps(dim() * other.dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < other.dim(); ++j) {
      amps[i * other.dim() + j] = amplitudes_[i] * other.amplitudes_[j];
    }
  }
  return {q_ + other.q_, std::move(amps)};
}

nlohmann::json StateVector::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const cplx& a : amplitudes_) out.push_back({a.real(), a.imag()});
  return out;
}

StateVector StateVector::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("state vector JSON must be an array of [re, im] pairs");
  std::vector<cplx> amps;
  amps.reserve(j.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw InputError("state vector JSON entry is not a [re, im] pair");
    }
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return from_amplitudes(std::move(amps), false);
}

cplx inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw InputError("inner product of states on " + std::to_string(a.q()) + " and " +
                     std::to_string(b.q()) + " qubits");
  }
  cplx sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd matrix) {
  const auto dim = static_cast<std::size_t>(matrix.rows());
  if (matrix.rows() != matrix.cols() || dim == 0 || !std::has_single_bit(dim)) {
    throw InputError("density matrix must be square with power-of-two dimension");
  }
  const int q = std::countr_zero(dim);
  check_qubits(q, kMaxDensityQubits, "density matrix");
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > tol::kNorm) {
    throw InputError("density matrix is not Hermitian");
  }
  if (std::abs(matrix.trace() - cplx(1.0)) > tol::kNorm) {
    throw InputError("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol::kEigenFloor) {
    throw InputError("density matrix has a negative eigenvalue");
  }
  return {q, std::move(matrix)};
}

DensityMatrix DensityMatrix::from_pure(const StateVector& s) {
  check_qubits(s.q(), kMaxDensityQubits, "density matrix");
  Eigen::Map<const Eigen::VectorXcd> v(s.amplitudes().data(), static_cast<Eigen::Index>(s.dim()));
  return {s.q(), v * v.adjoint()};
}

DensityMatrix DensityMatrix::maximally_mixed(int q) {
  check_qubits(q, kMaxDensityQubits, "density matrix");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << q);
  return {q, Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim)};
}

DensityMatrix DensityMatrix::random(int q, int rank, Rng& rng) {
  check_qubits(q, kMaxDensityQubits, "density matrix");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << q);
  if (rank < 1 || rank > dim) throw InputError("density matrix rank out of range");
  Eigen::MatrixXcd g(dim, rank);
  for (Eigen::Index c = 0; c < rank; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(r, c) = cplx(re, im);
    }
  }
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()) / 2.0;
  return {q, std::move(rho)};
}

}  // namespace qkolab::qsim
