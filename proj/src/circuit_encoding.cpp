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

#include "qkolab/circuit_encoding.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "qkolab/errors.hpp"

namespace qkolab::complexity {
namespace {

using qsim::Gate;
using qsim::GateBasis;
using qsim::Opcode;

constexpr std::size_t kLoopCountBits = 32;
constexpr std::size_t kLoopBodyBits = 8;
constexpr std::size_t kMaxLoopBody = 255;
constexpr std::size_t kMaxDecodedGates = std::size_t{1} << 26;
constexpr char kMagic[4] = {'Q', 'K', 'C', 'E'};

std::size_t record_bits(const Gate& g, std::size_t tw, const GateBasis& basis) {
  std::size_t bits = kOpcodeBits + tw * static_cast<std::size_t>(qsim::gate_arity(g.op));
  if (qsim::is_parametrized(g.op)) bits += static_cast<std::size_t>(basis.p);
  return bits;
}

void put_gate(BitString& out, const Gate& g, std::size_t tw, const GateBasis& basis) {
  out.append_uint(static_cast<std::uint64_t>(g.op), kOpcodeBits);
  for (int i = 0; i < qsim::gate_arity(g.op); ++i) {
    out.append_uint(static_cast<std::uint64_t>(g.targets[i]), tw);
  }
  if (qsim::is_parametrized(g.op)) out.append_uint(g.angle_k, static_cast<std::size_t>(basis.p));
}

Gate shifted(Gate g, long shift) {
  g.targets[0] += static_cast<int>(shift);
  if (g.targets[1] >= 0) g.targets[1] += static_cast<int>(shift);
  return g;
}

bool block_matches(const std::vector<Gate>& gates, std::size_t at, std::size_t body,
                   std::size_t length, long shift) {
  for (std::size_t t = 0; t < length; ++t) {
    if (!(gates[at + t] == shifted(gates[body + t], shift))) return false;
  }
  return true;
}

struct Loop {
  std::size_t length = 0;
  std::size_t count = 0;
  long stride = 0;
  long savings = 0;
};

// Most bit-saving loop starting at `i`, or savings 0 if none helps.
Loop best_loop(const std::vector<Gate>& gates, std::size_t i, std::size_t tw,
               const GateBasis& basis) {
  Loop best;
  const std::size_t n = gates.size();
  for (std::size_t length = 1; length <= kMaxLoopBody && i + 2 * length <= n; ++length) {
    const Gate& a = gates[i];
    const Gate& b = gates[i + length];
    if (a.op != b.op || a.angle_k != b.angle_k) continue;
    const long stride = static_cast<long>(b.targets[0]) - a.targets[0];
    if (stride < 0 || static_cast<std::size_t>(stride) >> tw != 0) continue;
    std::size_t count = 1;
    while (i + (count + 1) * length <= n && count < 0xffffffffULL &&
           block_matches(gates, i + count * length, i, length, static_cast<long>(count) * stride)) {
      ++count;
    }
    if (count < 2) continue;
    std::size_t body_bits = 0;
    for (std::size_t t = 0; t < length; ++t) body_bits += record_bits(gates[i + t], tw, basis);
    const auto flat = static_cast<long>(count * body_bits);
    const auto looped =
        static_cast<long>(kOpcodeBits + kLoopCountBits + tw + kLoopBodyBits + body_bits);
    if (flat - looped > best.savings) best = {length, count, stride, flat - looped};
  }
  return best;
}

class Reader {
 public:
  explicit Reader(const BitString& bits) : bits_(bits) {}

  std::uint64_t take(std::size_t width, const char* what) {
    if (pos_ + width > bits_.size()) {
      throw DecodeError(std::string("truncated circuit encoding while reading ") + what, pos_);
    }
    const std::uint64_t v = bits_.read_uint(pos_, width);
    pos_ += width;
    return v;
  }
  std::size_t pos() const { return pos_; }
  std::size_t size() const { return bits_.size(); }
  bool bit(std::size_t i) const { return bits_[i]; }

 private:
  const BitString& bits_;
  std::size_t pos_ = 0;
};

Gate read_gate(Reader& r, std::uint64_t opcode, std::size_t start, int q, std::size_t tw,
               const GateBasis& basis) {
  if (opcode > static_cast<std::uint64_t>(Opcode::kRz)) {
    throw DecodeError("unknown opcode " + std::to_string(opcode), start);
  }
  Gate g;
  g.op = static_cast<Opcode>(opcode);
  g.targets[1] = -1;
  for (int i = 0; i < qsim::gate_arity(g.op); ++i) {
    const std::size_t at = r.pos();
    g.targets[i] = static_cast<int>(r.take(tw, "target"));
    if (g.targets[i] >= q) throw DecodeError("target qubit out of range", at);
  }
  if (qsim::gate_arity(g.op) == 2 && g.targets[0] == g.targets[1]) {
    throw DecodeError("two-qubit gate with equal targets", start);
  }
  if (qsim::is_parametrized(g.op)) {
    if (basis.kind != GateBasis::Kind::kQuantizedRotation) {
      throw DecodeError("rotation gate in an exact-basis circuit", start);
    }
    g.angle_k = r.take(static_cast<std::size_t>(basis.p), "angle");
  }
  return g;
}

}  // namespace

std::size_t target_bits(int q) { return codes::bits_for(static_cast<std::size_t>(q)); }

int angle_bits_for(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw InputError("eps must lie in (0, 1)");
  int p = 0;
  while (std::ldexp(1.0, -p) > eps) ++p;
  if (p > 62) throw InputError("eps needs more than 62 angle bits");
  return p;
}

CircuitEncoding encode_circuit(const Circuit& c, EncodingForm form) {
  const std::size_t tw = target_bits(c.q());
  const GateBasis& basis = c.basis();
  const auto& gates = c.gates();
  BitString body;
  std::size_t records = 0;
  for (std::size_t i = 0; i < gates.size();) {
    if (form == EncodingForm::kCompact) {
      const Loop loop = best_loop(gates, i, tw, basis);
      if (loop.savings > 0) {
        body.append_uint(kLoopOpcode, kOpcodeBits);
        body.append_uint(loop.count, kLoopCountBits);
        body.append_uint(static_cast<std::uint64_t>(loop.stride), tw);
        body.append_uint(loop.length, kLoopBodyBits);
        for (std::size_t t = 0; t < loop.length; ++t) put_gate(body, gates[i + t], tw, basis);
        ++records;
        i += loop.count * loop.length;
        continue;
      }
    }
    put_gate(body, gates[i], tw, basis);
    ++records;
    ++i;
  }
  if (records > 0xffffffffULL) throw CapError("circuit has more than 2^32 - 1 records");
  CircuitEncoding e;
  e.format_version = static_cast<int>(form);
  e.basis = basis;
  e.payload.append_uint(static_cast<std::uint64_t>(form), 8);
  e.payload.append_uint(static_cast<std::uint64_t>(c.q()), 16);
  e.payload.append_uint(static_cast<std::uint64_t>(basis.kind), 8);
  e.payload.append_uint(static_cast<std::uint64_t>(basis.p), 8);
  e.payload.append_uint(records, 32);
  e.payload.append(body);
  while (e.payload.size() % 8 != 0) e.payload.push_back(false);
  return e;
}

Circuit decode_circuit(const BitString& payload) {
  Reader r(payload);
  const std::uint64_t version = r.take(8, "version");
  if (version != 1 && version != 2) throw DecodeError("unsupported circuit format version", 0);
  const auto q = static_cast<int>(r.take(16, "qubit count"));
  if (q < 1) throw DecodeError("circuit with zero qubits", 8);
  const std::uint64_t flag = r.take(8, "basis flag");
  const auto p = static_cast<int>(r.take(8, "angle precision"));
  GateBasis basis;
  if (flag == 0) {
    if (p != 0) throw DecodeError("exact basis with nonzero angle precision", 32);
  } else if (flag == 1) {
    if (p < 1 || p > 62) throw DecodeError("angle precision out of range", 32);
    basis = GateBasis::quantized(p);
  } else {
    throw DecodeError("unknown basis flag", 24);
  }
  const std::uint64_t records = r.take(32, "record count");
  const std::size_t tw = target_bits(q);
  Circuit c(q, basis);
  for (std::uint64_t k = 0; k < records; ++k) {
    const std::size_t start = r.pos();
    const std::uint64_t opcode = r.take(kOpcodeBits, "opcode");
    if (opcode != kLoopOpcode) {
      c.add(read_gate(r, opcode, start, q, tw, basis));
      continue;
    }
    if (version != 2) throw DecodeError("loop record in a flat encoding", start);
    const std::uint64_t count = r.take(kLoopCountBits, "loop count");
    const auto stride = static_cast<long>(r.take(tw, "loop stride"));
    const std::uint64_t length = r.take(kLoopBodyBits, "loop body length");
    if (count == 0 || length == 0) throw DecodeError("empty loop", start);
    std::vector<Gate> body;
    for (std::uint64_t t = 0; t < length; ++t) {
      const std::size_t at = r.pos();
      const std::uint64_t op = r.take(kOpcodeBits, "opcode");
      if (op == kLoopOpcode) throw DecodeError("nested loop", at);
      body.push_back(read_gate(r, op, at, q, tw, basis));
    }
    if (c.size() + count * length > kMaxDecodedGates) {
      throw DecodeError("loop expands beyond 2^26 gates", start);
    }
    for (std::uint64_t rep = 0; rep < count; ++rep) {
      for (const Gate& g : body) {
        const Gate s = shifted(g, static_cast<long>(rep) * stride);
        if (s.targets[0] >= q || s.targets[1] >= q) {
          throw DecodeError("loop shifts a target out of range", start);
        }
        c.add(s);
      }
    }
  }
  if (r.size() - r.pos() >= 8) throw DecodeError("trailing data after the last record", r.pos());
  for (std::size_t i = r.pos(); i < r.size(); ++i) {
    if (r.bit(i)) throw DecodeError("nonzero padding", i);
  }
  return c;
}

std::vector<std::uint8_t> to_container(const CircuitEncoding& e) {
  std::vector<std::uint8_t> out(kMagic, kMagic + 4);
  const auto bytes = e.payload.to_bytes();
  out.insert(out.end(), bytes.begin(), bytes.end());
  return out;
}

CircuitEncoding from_container(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw DecodeError("missing QKCE magic", 0);
  }
  CircuitEncoding e;
  e.payload = BitString::from_bytes(bytes.subspan(4), (bytes.size() - 4) * 8);
  const Circuit c = decode_circuit(e.payload);
  e.format_version = static_cast<int>(e.payload.read_uint(0, 8));
  e.basis = c.basis();
  return e;
}

}  // namespace qkolab::complexity
