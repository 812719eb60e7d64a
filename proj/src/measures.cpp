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

#include "qkolab/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qkolab/errors.hpp"

namespace qkolab::qsim {
namespace {

void check_same_dim(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw InputError("states on " + std::to_string(a.q()) + " and " + std::to_string(b.q()) +
                     " qubits cannot be compared");
  }
}

std::vector<int> sorted_subset(std::span<const int> qubits, int q, const char* what) {
  std::vector<int> out(qubits.begin(), qubits.end());
  std::sort(out.begin(), out.end());
  if (out.empty()) throw InputError(std::string(what) + ": qubit set is empty");
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw InputError(std::string(what) + ": repeated qubit index");
  }
  if (out.front() < 0 || out.back() >= q) {
    throw InputError(std::string(what) + ": qubit index out of range for q=" + std::to_string(q));
  }
  return out;
}

// Splits each basis index of a q-qubit register into (index over `keep`,
// index over the rest); both keep the original significance order.
struct Split {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> rest;
  std::size_t kept_dim = 0;
  std::size_t rest_dim = 0;
};

Split split_indices(int q, const std::vector<int>& keep) {
  std::vector<bool> is_kept(static_cast<std::size_t>(q), false);
  for (int k : keep) is_kept[static_cast<std::size_t>(k)] = true;
  Split out;
  const std::size_t dim = std::size_t{1} << q;
  out.kept.resize(dim);
  out.rest.resize(dim);
  out.kept_dim = std::size_t{1} << keep.size();
  out.rest_dim = dim / out.kept_dim;
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t a = 0;
    std::size_t e = 0;
    for (int j = 0; j < q; ++j) {
      const std::size_t bit = (i >> (q - 1 - j)) & 1U;
      if (is_kept[static_cast<std::size_t>(j)]) {
        a = (a << 1) | bit;
      } else {
        e = (e << 1) | bit;
      }
    }
    out.kept[i] = a;
    out.rest[i] = e;
  }
  return out;
}

Eigen::MatrixXcd reshape(const StateVector& s, const Split& split) {
  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(split.kept_dim),
                                                static_cast<Eigen::Index>(split.rest_dim));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    psi(static_cast<Eigen::Index>(split.kept[i]), static_cast<Eigen::Index>(split.rest[i])) = s[i];
  }
  return psi;
}

// Columns V_i sqrt(l_i) for eigenvalues above round-off.
Eigen::MatrixXcd psd_factor(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  const Eigen::VectorXd& values = solver.eigenvalues();
  const double top = values.size() > 0 ? values.maxCoeff() : 0.0;
  const double cut = 64.0 * std::numeric_limits<double>::epsilon() * std::max(top, 1.0) *
                     static_cast<double>(values.size());
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) < -tol::kEigenFloor) throw InputError("matrix is not positive semidefinite");
    if (values(i) > cut) kept.push_back(i);
  }
  Eigen::MatrixXcd out(m.rows(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j) {
    out.col(static_cast<Eigen::Index>(j)) =
        solver.eigenvectors().col(kept[j]) * std::sqrt(values(kept[j]));
  }
  return out;
}

}  // namespace

double fidelity(const StateVector& a, const StateVector& b) {
  check_same_dim(a, b);
  return std::min(1.0, std::norm(inner(a, b)));
}

OutcomeDistribution swap_test(const StateVector& a, const StateVector& b) {
  const double f = fidelity(a, b);
  const double p0 = (1.0 + f) / 2.0;
  return {p0, 1.0 - p0};
}

Circuit swap_test_circuit(int q) {
  if (q < 1) throw InputError("swap test needs at least one qubit per state");
  Circuit c(2 * q + 1);
  c.h(0);
  for (int j = 0; j < q; ++j) {
    const int a = 1 + j;
    const int b = 1 + q + j;
    c.cnot(b, a);
    c.toffoli(0, a, b);
    c.cnot(b, a);
  }
  c.h(0);
  return c;
}

OutcomeDistribution swap_test_simulated(const StateVector& a, const StateVector& b) {
  check_same_dim(a, b);
  const StateVector input = StateVector::zero(1).tensor(a).tensor(b);
  const StateVector out = apply_circuit(swap_test_circuit(a.q()), input);
  // Ancilla is qubit 0, the top half of the index range.
  const std::size_t half = out.dim() / 2;
  double p0 = 0.0;
  double p1 = 0.0;
  for (std::size_t i = 0; i < half; ++i) p0 += std::norm(out[i]);
  for (std::size_t i = half; i < out.dim(); ++i) p1 += std::norm(out[i]);
  return {p0, p1};
}

int swap_test_sample(const StateVector& a, const StateVector& b, Rng& rng) {
  return rng.uniform() < swap_test(a, b).p0 ? 0 : 1;
}

DensityMatrix partial_trace(const StateVector& s, std::span<const int> keep) {
  const std::vector<int> kept = sorted_subset(keep, s.q(), "partial_trace");
  if (kept.size() > static_cast<std::size_t>(kMaxDensityQubits)) {
    throw CapError("partial_trace: result on more than 10 qubits");
  }
  const Eigen::MatrixXcd psi = reshape(s, split_indices(s.q(), kept));
  Eigen::MatrixXcd rho = psi * psi.adjoint();
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityMatrix::from_matrix(std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& r, std::span<const int> keep) {
  const std::vector<int> kept = sorted_subset(keep, r.q(), "partial_trace");
  const Split split = split_indices(r.q(), kept);
  std::vector<std::vector<std::size_t>> index(split.kept_dim,
                                              std::vector<std::size_t>(split.rest_dim));
  for (std::size_t i = 0; i < r.dim(); ++i) index[split.kept[i]][split.rest[i]] = i;
  const auto kd = static_cast<Eigen::Index>(split.kept_dim);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kd, kd);
  for (std::size_t a = 0; a < split.kept_dim; ++a) {
    for (std::size_t b = 0; b < split.kept_dim; ++b) {
      cplx sum = 0.0;
      for (std::size_t e = 0; e < split.rest_dim; ++e) {
        sum += r.matrix()(static_cast<Eigen::Index>(index[a][e]),
                          static_cast<Eigen::Index>(index[b][e]));
      }
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = sum;
    }
  }
  return DensityMatrix::from_matrix(std::move(out));
}

double uhlmann_fidelity(const DensityMatrix& r, const DensityMatrix& s) {
  if (r.dim() != s.dim()) throw InputError("uhlmann_fidelity: dimension mismatch");
  // F = ||A^dag B||_1 with r = A A^dag, s = B B^dag.
  const Eigen::MatrixXcd a = psd_factor(r.matrix());
  const Eigen::MatrixXcd b = psd_factor(s.matrix());
  if (a.cols() == 0 || b.cols() == 0) return 0.0;
  const Eigen::MatrixXcd overlap = a.adjoint() * b;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(overlap);
  return std::clamp(svd.singularValues().sum(), 0.0, 1.0);
}

int schmidt_rank(const StateVector& s, std::span<const int> partition) {
  const std::vector<int> part = sorted_subset(partition, s.q(), "schmidt_rank");
  if (part.size() == static_cast<std::size_t>(s.q())) {
    throw InputError("schmidt_rank: partition must be a proper subset of the qubits");
  }
  const Eigen::MatrixXcd psi = reshape(s, split_indices(s.q(), part));
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(psi);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol::kSingularValue) ++rank;
  }
  return rank;
}

const double TetrahedralPovm::kDirections[4][3] = {
    {0.0, 0.0, 1.0},
    {2.0 * std::numbers::sqrt2 / 3.0, 0.0, -1.0 / 3.0},
    {-std::numbers::sqrt2 / 3.0, std::numbers::sqrt2 / std::numbers::sqrt3, -1.0 / 3.0},
    {-std::numbers::sqrt2 / 3.0, -std::numbers::sqrt2 / std::numbers::sqrt3, -1.0 / 3.0},
};

Eigen::Matrix2cd TetrahedralPovm::element(int k) {
  const double* n = kDirections[k];
  Eigen::Matrix2cd m;
  m << cplx(1.0 + n[2], 0.0), cplx(n[0], -n[1]), cplx(n[0], n[1]), cplx(1.0 - n[2], 0.0);
  return m / 4.0;
}

std::vector<double> povm_outcome_distribution(const StateVector& s, std::span<const int> qubits) {
  std::vector<int> measured;
  if (qubits.empty()) {
    for (int j = 0; j < s.q(); ++j) measured.push_back(j);
  } else {
    measured = sorted_subset(qubits, s.q(), "povm_outcome_distribution");
  }
  if (measured.size() > 8) {
    throw CapError("povm_outcome_distribution: at most 8 measured qubits (4^8 outcomes)");
  }
  const DensityMatrix rho = partial_trace(s, measured);
  const std::size_t k = measured.size();
  std::array<Eigen::Matrix2cd, 4> elements;
  for (int e = 0; e < 4; ++e) elements[static_cast<std::size_t>(e)] = TetrahedralPovm::element(e);

  // t[o][r][c]: after j measured qubits, o ranges over 4^j outcomes and
  // r, c over the 2^(k-j) row/column indices still open.
  std::size_t outcomes = 1;
  std::size_t open = std::size_t{1} << k;
  std::vector<cplx> t(open * open);
  for (std::size_t r = 0; r < open; ++r) {
    for (std::size_t c = 0; c < open; ++c) {
      t[r * open + c] = rho.matrix()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t next_open = open / 2;
    std::vector<cplx> next(outcomes * 4 * next_open * next_open);
    for (std::size_t o = 0; o < outcomes; ++o) {
      const cplx* block = &t[o * open * open];
      for (std::size_t e = 0; e < 4; ++e) {
        const Eigen::Matrix2cd& m = elements[e];
        cplx* dst = &next[(o * 4 + e) * next_open * next_open];
        for (std::size_t r = 0; r < next_open; ++r) {
          for (std::size_t c = 0; c < next_open; ++c) {
            cplx sum = 0.0;
            for (std::size_t a = 0; a < 2; ++a) {
              for (std::size_t b = 0; b < 2; ++b) {
                // tr(M rho) = sum_ab M_ba rho_ab
                sum += m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) *
                       block[(a * next_open + r) * open + b * next_open + c];
              }
            }
            dst[r * next_open + c] = sum;
          }
        }
      }
    }
    t = std::move(next);
    outcomes *= 4;
    open = next_open;
  }
  std::vector<double> p(outcomes);
  for (std::size_t o = 0; o < outcomes; ++o) p[o] = std::max(0.0, t[o].real());
  return p;
}

PovmReport povm_report(const StateVector& s, std::span<const int> qubits) {
  PovmReport report;
  report.probabilities = povm_outcome_distribution(s, qubits);
  codes::BitString serialized;
  for (double p : report.probabilities) {
    const double scaled = std::nearbyint(std::ldexp(p, 32));
    serialized.append_uint(static_cast<std::uint64_t>(std::min(scaled, 4294967295.0)), 32);
  }
  report.description = codes::kcl_upper(serialized);
  return report;
}

MeasurementBasis MeasurementBasis::computational(std::size_t dim) {
  MeasurementBasis b;
  b.dim_ = dim;
  return b;
}

MeasurementBasis MeasurementBasis::from_vectors(std::vector<std::vector<cplx>> vectors) {
  const std::size_t dim = vectors.size();
  if (dim == 0) throw InputError("measurement basis is empty");
  for (const auto& v : vectors) {
    if (v.size() != dim) throw InputError("measurement basis must be square");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      cplx dot = 0.0;
      for (std::size_t k = 0; k < dim; ++k) dot += std::conj(vectors[i][k]) * vectors[j][k];
      if (std::abs(dot - (i == j ? cplx(1.0) : cplx(0.0))) > tol::kNorm) {
        throw InputError("measurement basis is not orthonormal");
      }
    }
  }
  MeasurementBasis b;
  b.dim_ = dim;
  b.vectors_ = std::move(vectors);
  return b;
}

std::vector<double> MeasurementBasis::probabilities(const StateVector& s) const {
  if (s.dim() != dim_) throw InputError("measurement basis dimension does not match the state");
  std::vector<double> p(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    if (is_computational()) {
      p[k] = std::norm(s[k]);
    } else {
      cplx dot = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) dot += std::conj(vectors_[k][i]) * s[i];
      p[k] = std::norm(dot);
    }
  }
  return p;
}

std::vector<double> MeasurementBasis::probabilities(const DensityMatrix& r) const {
  if (r.dim() != dim_) throw InputError("measurement basis dimension does not match the state");
  std::vector<double> p(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    const auto kk = static_cast<Eigen::Index>(k);
    if (is_computational()) {
      p[k] = r.matrix()(kk, kk).real();
    } else {
      cplx sum = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
          sum += std::conj(vectors_[k][i]) *
                 r.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *
                 vectors_[k][j];
        }
      }
      p[k] = sum.real();
    }
    p[k] = std::max(p[k], 0.0);
  }
  return p;
}

std::size_t sample_index(std::span<const double> probabilities, double u) {
  double cumulative = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    if (probabilities[k] <= 0.0) continue;
    cumulative += probabilities[k];
    last_nonzero = k;
    if (u < cumulative) return k;
  }
  return last_nonzero;
}

std::size_t sample_measurement(const StateVector& s, const MeasurementBasis& basis, Rng& rng) {
  const std::vector<double> p = basis.probabilities(s);
  return sample_index(p, rng.uniform());
}

std::size_t sample_measurement(const StateVector& s, const MeasurementBasis& basis,
                               std::uint64_t seed) {
  Rng rng(seed);
  return sample_measurement(s, basis, rng);
}

std::size_t sample_measurement(const DensityMatrix& r, const MeasurementBasis& basis, Rng& rng) {
  const std::vector<double> p = basis.probabilities(r);
  return sample_index(p, rng.uniform());
}

}  // namespace qkolab::qsim
