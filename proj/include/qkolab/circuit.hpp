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

#ifndef QKOLAB_CIRCUIT_HPP_
#define QKOLAB_CIRCUIT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "qkolab/state.hpp"

namespace qkolab::qsim {

/// Opcodes double as the 6-bit opcode field of the circuit encoding.
enum class Opcode : std::uint8_t {
  kH = 0,
  kX = 1,
  kZ = 2,
  kS = 3,
  kT = 4,
  kCnot = 5,
  kRy = 6,
  kRz = 7
};

std::string gate_name(Opcode op);
int gate_arity(Opcode op);
bool is_parametrized(Opcode op);

/// Exact-finite basis {H, X, Z, S, T, CNOT}, optionally extended by RY/RZ
/// with angles 2*pi*k / 2^p.
struct GateBasis {
  enum class Kind : std::uint8_t { kExactFinite = 0, kQuantizedRotation = 1 };
  Kind kind = Kind::kExactFinite;
  int p = 0;

  static GateBasis exact() { return {}; }
  static GateBasis quantized(int p);
  std::vector<std::string> gate_names() const;
  bool operator==(const GateBasis&) const = default;
};

struct Gate {
  Opcode op = Opcode::kH;
  /// targets[1] is used by CNOT only (control, target) and is -1 otherwise.
  int targets[2] = {0, -1};
  /// Rotation index k for RY/RZ; angle = 2*pi*k / 2^p.
  std::uint64_t angle_k = 0;

  bool operator==(const Gate& other) const {
    return op == other.op && targets[0] == other.targets[0] && targets[1] == other.targets[1] &&
           angle_k == other.angle_k;
  }
};

class Circuit {
 public:
  /// q may exceed the simulation cap; only apply_circuit enforces it.
  explicit Circuit(int q, GateBasis basis = GateBasis::exact());

  int q() const { return q_; }
  const GateBasis& basis() const { return basis_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Validates targets, arity and angle range against q and the basis.
  Circuit& add(const Gate& g);
  Circuit& h(int a) { return add({Opcode::kH, {a, -1}, 0}); }
  Circuit& x(int a) { return add({Opcode::kX, {a, -1}, 0}); }
  Circuit& z(int a) { return add({Opcode::kZ, {a, -1}, 0}); }
  Circuit& s(int a) { return add({Opcode::kS, {a, -1}, 0}); }
  Circuit& t(int a) { return add({Opcode::kT, {a, -1}, 0}); }
  /// T^dagger = T^7, emitted as T, S, Z.
  Circuit& tdg(int a);
  Circuit& cnot(int control, int target) { return add({Opcode::kCnot, {control, target}, 0}); }
  Circuit& ry(int a, std::uint64_t k) { return add({Opcode::kRy, {a, -1}, k}); }
  Circuit& rz(int a, std::uint64_t k) { return add({Opcode::kRz, {a, -1}, k}); }
  /// 15-gate Clifford+T Toffoli.
  Circuit& toffoli(int a, int b, int target);

  /// First `count` gates.
  Circuit prefix(std::size_t count) const;

  bool operator==(const Circuit& other) const {
    return q_ == other.q_ && basis_ == other.basis_ && gates_ == other.gates_;
  }

 private:
  int q_;
  GateBasis basis_;
  std::vector<Gate> gates_;
};

/// Angle in radians of a parametrized gate under `basis`.
double gate_angle(const Gate& g, const GateBasis& basis);

void apply_gate(StateVector& s, const Gate& g, const GateBasis& basis);
StateVector apply_circuit(const Circuit& c, const StateVector& s0);

/// Text form: one gate per line, e.g. "h 0", "cx 0 1", "ry 2 5".
std::string to_text(const Circuit& c);

}  // namespace qkolab::qsim

#endif  // QKOLAB_CIRCUIT_HPP_
