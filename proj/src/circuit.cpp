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

#include "qkolab/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qkolab/errors.hpp"

namespace qkolab::qsim {

std::string gate_name(Opcode op) {
  switch (op) {
    case Opcode::kH:
      return "h";
    case Opcode::kX:
      return "x";
    case Opcode::kZ:
      return "z";
    case Opcode::kS:
      return "s";
    case Opcode::kT:
      return "t";
    case Opcode::kCnot:
      return "cx";
    case Opcode::kRy:
      return "ry";
    case Opcode::kRz:
      return "rz";
  }
  return "?";
}

int gate_arity(Opcode op) { return op == Opcode::kCnot ? 2 : 1; }

bool is_parametrized(Opcode op) { return op == Opcode::kRy || op == Opcode::kRz; }

GateBasis GateBasis::quantized(int p) {
  if (p < 1 || p > 62) throw InputError("rotation precision p must lie in [1, 62]");
  return {Kind::kQuantizedRotation, p};
}

std::vector<std::string> GateBasis::gate_names() const {
  std::vector<std::string> names = {"h", "x", "z", "s", "t", "cx"};
  if (kind == Kind::kQuantizedRotation) {
    names.emplace_back("ry");
    names.emplace_back("rz");
  }
  return names;
}

Circuit::Circuit(int q, GateBasis basis) : q_(q), basis_(basis) {
  if (q < 1 || q > 65535) throw InputError("circuit qubit count must lie in [1, 65535]");
  if (basis.kind == GateBasis::Kind::kExactFinite && basis.p != 0) {
    throw InputError("exact-finite basis carries no angle precision");
  }
}

Circuit& Circuit::add(const Gate& g) {
  const int arity = gate_arity(g.op);
  for (int i = 0; i < arity; ++i) {
    if (g.targets[i] < 0 || g.targets[i] >= q_) {
      throw InputError(gate_name(g.op) + ": qubit " + std::to_string(g.targets[i]) +
                       " out of range for q=" + std::to_string(q_));
    }
  }
  if (arity == 1 && g.targets[1] != -1) throw InputError("single-qubit gate with two targets");
  if (arity == 2 && g.targets[0] == g.targets[1]) throw InputError("cx targets must differ");
  if (is_parametrized(g.op)) {
    if (basis_.kind != GateBasis::Kind::kQuantizedRotation) {
      throw InputError(gate_name(g.op) + " requires the quantized-rotation basis");
    }
    if (g.angle_k >> basis_.p != 0) throw InputError("rotation index exceeds 2^p");
  } else if (g.angle_k != 0) {
    throw InputError(gate_name(g.op) + " takes no angle");
  }
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::tdg(int a) { return t(a).s(a).z(a); }

Circuit& Circuit::toffoli(int a, int b, int target) {
  if (a == b || a == target || b == target) throw InputError("toffoli qubits must be distinct");
  h(target);
  cnot(b, target);
  tdg(target);
  cnot(a, target);
  t(target);
  cnot(b, target);
  tdg(target);
  cnot(a, target);
  t(b);
  t(target);
  h(target);
  cnot(a, b);
  t(a);
  tdg(b);
  cnot(a, b);
  return *this;
}

Circuit Circuit::prefix(std::size_t count) const {
  Circuit out(q_, basis_);
  out.gates_.assign(gates_.begin(),
                    gates_.begin() + static_cast<std::ptrdiff_t>(std::min(count, gates_.size())));
  return out;
}

double gate_angle(const Gate& g, const GateBasis& basis) {
  if (!is_parametrized(g.op)) return 0.0;
  return 2.0 * std::numbers::pi * std::ldexp(static_cast<double>(g.angle_k), -basis.p);
}

namespace {

// Applies [[u00, u01], [u10, u11]] to the qubit whose index bit is `mask`.
void apply_one(std::vector<cplx>& a, std::size_t mask, cplx u00, cplx u01, cplx u10, cplx u11) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i & mask) continue;
    const cplx v0 = a[i];
    const cplx v1 = a[i | mask];
    a[i] = u00 * v0 + u01 * v1;
    a[i | mask] = u10 * v0 + u11 * v1;
  }
}

}  // namespace

void apply_gate(StateVector& s, const Gate& g, const GateBasis& basis) {
  const int q = s.q();
  for (int i = 0; i < gate_arity(g.op); ++i) {
    if (g.targets[i] < 0 || g.targets[i] >= q) {
      throw InputError("gate qubit " + std::to_string(g.targets[i]) +
                       " out of range for q=" + std::to_string(q));
    }
  }
  auto& a = s.mutable_amplitudes();
  const std::size_t mask = std::size_t{1} << (q - 1 - g.targets[0]);
  const double r = std::numbers::sqrt2 / 2.0;
  switch (g.op) {
    case Opcode::kH:
      apply_one(a, mask, r, r, r, -r);
      break;
    case Opcode::kX:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(i & mask)) std::swap(a[i], a[i | mask]);
      }
      break;
    case Opcode::kZ:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i & mask) a[i] = -a[i];
      }
      break;
    case Opcode::kS:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i & mask) a[i] *= cplx(0.0, 1.0);
      }
      break;
    case Opcode::kT:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i & mask) a[i] *= cplx(r, r);
      }
      break;
    case Opcode::kCnot: {
      const std::size_t target = std::size_t{1} << (q - 1 - g.targets[1]);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if ((i & mask) && !(i & target)) std::swap(a[i], a[i | target]);
      }
      break;
    }
    case Opcode::kRy: {
      const double theta = gate_angle(g, basis);
      const double c = std::cos(theta / 2.0);
      const double sn = std::sin(theta / 2.0);
      apply_one(a, mask, c, -sn, sn, c);
      break;
    }
    case Opcode::kRz: {
      const double theta = gate_angle(g, basis);
      const cplx phase = std::polar(1.0, theta / 2.0);
      apply_one(a, mask, std::conj(phase), 0.0, 0.0, phase);
      break;
    }
  }
}

StateVector apply_circuit(const Circuit& c, const StateVector& s0) {
  if (c.q() != s0.q()) {
    throw InputError("circuit on " + std::to_string(c.q()) + " qubits applied to a " +
                     std::to_string(s0.q()) + "-qubit state");
  }
  StateVector s = s0;
  for (const Gate& g : c.gates()) apply_gate(s, g, c.basis());
  return s;
}

std::string to_text(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.q() << "\n";
  if (c.basis().kind == GateBasis::Kind::kQuantizedRotation)
    out << "precision " << c.basis().p << "\n";
  for (const Gate& g : c.gates()) {
    out << gate_name(g.op) << ' ' << g.targets[0];
    if (gate_arity(g.op) == 2) out << ' ' << g.targets[1];
    if (is_parametrized(g.op)) out << ' ' << g.angle_k;
    out << "\n";
  }
  return out.str();
}

}  // namespace qkolab::qsim
