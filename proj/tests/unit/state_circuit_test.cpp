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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qkolab/circuit.hpp"
#include "qkolab/errors.hpp"
#include "qkolab/random.hpp"
#include "qkolab/state.hpp"

namespace qkolab::qsim {
namespace {

using Mat = Eigen::MatrixXcd;
constexpr double kPi = std::numbers::pi;

// Dense oracle. Qubit 0 is the most significant bit of the basis index.
Mat embed(const Eigen::Matrix2cd& u, int a, int q) {
  const Mat left = Mat::Identity(1 << a, 1 << a);
  const Mat right = Mat::Identity(1 << (q - a - 1), 1 << (q - a - 1));
  Mat lu(left.rows() * 2, left.cols() * 2);
  for (Eigen::Index i = 0; i < left.rows(); ++i) {
    for (Eigen::Index j = 0; j < left.cols(); ++j) lu.block(2 * i, 2 * j, 2, 2) = left(i, j) * u;
  }
  Mat out(lu.rows() * right.rows(), lu.cols() * right.cols());
  for (Eigen::Index i = 0; i < lu.rows(); ++i) {
    for (Eigen::Index j = 0; j < lu.cols(); ++j) {
      out.block(i * right.rows(), j * right.cols(), right.rows(), right.cols()) = lu(i, j) * right;
    }
  }
  return out;
}

Mat cnot_oracle(int c, int t, int q) {
  const std::size_t dim = std::size_t{1} << q;
  Mat out = Mat::Zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t j = i;
    if ((i >> (q - 1 - c)) & 1U) j ^= std::size_t{1} << (q - 1 - t);
    out(j, i) = 1.0;
  }
  return out;
}

Mat gate_oracle(const Gate& g, const GateBasis& basis, int q) {
  const cplx i1(0.0, 1.0);
  Eigen::Matrix2cd u;
  const double th = g.op == Opcode::kRy || g.op == Opcode::kRz
                        ? 2.0 * kPi * static_cast<double>(g.angle_k) / std::ldexp(1.0, basis.p)
                        : 0.0;
  switch (g.op) {
    case Opcode::kH:
      u << 1, 1, 1, -1;
      u /= std::sqrt(2.0);
      break;
    case Opcode::kX:
      u << 0, 1, 1, 0;
      break;
    case Opcode::kZ:
      u << 1, 0, 0, -1;
      break;
    case Opcode::kS:
      u << 1, 0, 0, i1;
      break;
    case Opcode::kT:
      u << 1, 0, 0, std::exp(i1 * kPi / 4.0);
      break;
    case Opcode::kRy:
      u << std::cos(th / 2), -std::sin(th / 2), std::sin(th / 2), std::cos(th / 2);
      break;
    case Opcode::kRz:
      u << std::exp(-i1 * th / 2.0), 0, 0, std::exp(i1 * th / 2.0);
      break;
    case Opcode::kCnot:
      return cnot_oracle(g.targets[0], g.targets[1], q);
  }
  return embed(u, g.targets[0], q);
}

Eigen::VectorXcd as_vector(const StateVector& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

TEST(StateVectorTest, BasisAndZero) {
  const auto z = StateVector::zero(3);
  EXPECT_EQ(z.dim(), 8u);
  EXPECT_EQ(z[0], cplx(1.0));
  const auto b = StateVector::basis(3, 5);
  EXPECT_EQ(b[5], cplx(1.0));
  EXPECT_THROW(StateVector::basis(3, 8), InputError);
  EXPECT_THROW(StateVector::zero(kMaxStateQubits + 1), CapError);
}

TEST(StateVectorTest, FromAmplitudesValidates) {
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), InputError);
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), InputError);
  const auto s = StateVector::from_amplitudes({1.0, 1.0}, true);
  EXPECT_NEAR(std::abs(s[0]), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(StateVectorTest, HaarStatesAreNormalizedAndSpread) {
  Rng rng(31);
  double mean_overlap = 0.0;
  const int trials = 2000;
  for (int t = 0; t < trials; ++t) {
    const auto a = StateVector::haar_random(3, rng);
    const auto b = StateVector::haar_random(3, rng);
    EXPECT_NEAR(std::norm(inner(a, a)), 1.0, 1e-12);
    mean_overlap += std::norm(inner(a, b));
  }
  // E|<a|b>|^2 = 1/d for Haar pairs.
  EXPECT_NEAR(mean_overlap / trials, 1.0 / 8.0, 0.01);
}

TEST(StateVectorTest, TensorProductOrdersFirstFactorHigh) {
  const auto s = StateVector::basis(1, 1).tensor(StateVector::basis(2, 2));
  EXPECT_EQ(s.q(), 3);
  EXPECT_EQ(s[0b110], cplx(1.0));
}

TEST(StateVectorTest, JsonRoundTrip) {
  Rng rng(32);
  const auto s = StateVector::haar_random(2, rng);
  const auto back = StateVector::from_json(s.to_json());
  for (std::size_t i = 0; i < s.dim(); ++i) EXPECT_EQ(back[i], s[i]);
}

TEST(CircuitTest, EveryGateMatchesDenseOracle) {
  Rng rng(33);
  const int q = 4;
  const GateBasis basis = GateBasis::quantized(6);
  for (int t = 0; t < 400; ++t) {
    const auto op = static_cast<Opcode>(rng.below(8));
    Gate g{op, {static_cast<int>(rng.below(q)), -1}, 0};
    if (op == Opcode::kCnot) {
      do {
        g.targets[1] = static_cast<int>(rng.below(q));
      } while (g.targets[1] == g.targets[0]);
    }
    if (is_parametrized(op)) g.angle_k = rng.below(64);
    const auto s = StateVector::haar_random(q, rng);
    StateVector got = s;
    apply_gate(got, g, basis);
    const Eigen::VectorXcd want = gate_oracle(g, basis, q) * as_vector(s);
    EXPECT_LT((as_vector(got) - want).norm(), 1e-12) << gate_name(op);
  }
}

TEST(CircuitTest, ToffoliSequenceIsExactToffoli) {
  Circuit c(3);
  c.toffoli(0, 2, 1);
  for (std::size_t i = 0; i < 8; ++i) {
    const auto out = apply_circuit(c, StateVector::basis(3, i));
    std::size_t expected = i;
    if ((i & 4U) && (i & 1U)) expected ^= 2U;
    EXPECT_NEAR(std::abs(out[expected]), 1.0, 1e-12) << i;
    EXPECT_NEAR(std::arg(out[expected]), 0.0, 1e-12) << i;
  }
}

TEST(CircuitTest, TdgInvertsT) {
  Rng rng(34);
  const auto s = StateVector::haar_random(2, rng);
  Circuit c(2);
  c.t(1).tdg(1);
  const auto out = apply_circuit(c, s);
  for (std::size_t i = 0; i < s.dim(); ++i) EXPECT_NEAR(std::abs(out[i] - s[i]), 0.0, 1e-14);
}

TEST(CircuitTest, ValidatesGates) {
  Circuit exact(2);
  EXPECT_THROW(exact.ry(0, 1), InputError);
  EXPECT_THROW(exact.h(2), InputError);
  EXPECT_THROW(exact.cnot(1, 1), InputError);
  Circuit rot(2, GateBasis::quantized(4));
  EXPECT_THROW(rot.rz(0, 16), InputError);
  EXPECT_NO_THROW(rot.rz(0, 15));
}

TEST(CircuitTest, PrefixAndEquality) {
  Circuit c(2);
  c.h(0).cnot(0, 1).x(1);
  EXPECT_EQ(c.prefix(2).size(), 2u);
  Circuit d(2);
  d.h(0).cnot(0, 1);
  EXPECT_EQ(c.prefix(2), d);
  EXPECT_FALSE(c == d);
}

TEST(CircuitTest, FullTurnRotationIsMinusIdentity) {
  // RY(2 pi) = -I under the half-angle convention.
  Circuit c(1, GateBasis::quantized(2));
  c.ry(0, 2).ry(0, 2);
  const auto out = apply_circuit(c, StateVector::zero(1));
  EXPECT_NEAR(out[0].real(), -1.0, 1e-12);
}

TEST(DensityMatrixTest, ConstructorsProduceValidStates) {
  Rng rng(35);
  const auto r = DensityMatrix::random(3, 2, rng);
  EXPECT_NEAR(r.matrix().trace().real(), 1.0, 1e-12);
  Eigen::SelfAdjointEigenSolver<Mat> es(r.matrix());
  int nonzero = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    EXPECT_GT(es.eigenvalues()(i), -1e-12);
    if (es.eigenvalues()(i) > 1e-9) ++nonzero;
  }
  EXPECT_EQ(nonzero, 2);
  const auto mm = DensityMatrix::maximally_mixed(2);
  EXPECT_NEAR((mm.matrix() - Mat::Identity(4, 4) / 4.0).norm(), 0.0, 1e-15);
  Mat bad = Mat::Identity(2, 2);
  EXPECT_THROW(DensityMatrix::from_matrix(bad), InputError);
}

}  // namespace
}  // namespace qkolab::qsim
