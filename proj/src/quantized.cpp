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

#include "qkolab/quantized.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qkolab/errors.hpp"

namespace qkolab::fingerprint {

std::size_t quantized_length_bits(int q, int p) {
  return (std::size_t{2} << q) * static_cast<std::size_t>(p) + kQuantizedHeaderBits;
}

int component_bits_for(double eps_a) {
  if (!(eps_a > 0.0 && eps_a < 1.0)) throw InputError("precision eps_a must lie in (0, 1)");
  int p0 = 0;
  while (std::ldexp(1.0, -p0) > eps_a) ++p0;
  const int p = p0 + 1;
  if (p > kMaxComponentBits) {
    throw InputError("eps_a=" + std::to_string(eps_a) + " needs " + std::to_string(p) +
                     " bits per component, more than 62");
  }
  return p;
}

QuantizedDescription quantize_state(const qsim::StateVector& s, double eps_a) {
  return quantize_state_bits(s, component_bits_for(eps_a));
}

QuantizedDescription quantize_state_bits(const qsim::StateVector& s, int p) {
  if (p < 2 || p > kMaxComponentBits) {
    throw InputError("bits per component must lie in [2, 62], got " + std::to_string(p));
  }
  QuantizedDescription d{s.q(), p, {}};
  d.bits.append_uint(static_cast<std::uint64_t>(s.q()), 16);
  d.bits.append_uint(static_cast<std::uint64_t>(p), 16);
  d.bits.append_uint(0, 32);
  const double scale = std::ldexp(1.0, p - 1);
  const auto lo = -static_cast<std::int64_t>(std::int64_t{1} << (p - 1));
  const std::int64_t hi = (std::int64_t{1} << (p - 1)) - 1;
  const std::uint64_t mask = (std::uint64_t{1} << p) - 1;
  auto put = [&](double component) {
    auto v = static_cast<std::int64_t>(std::nearbyint(component * scale));
    v = std::clamp(v, lo, hi);
    d.bits.append_uint(static_cast<std::uint64_t>(v) & mask, static_cast<std::size_t>(p));
  };
  for (const qsim::cplx& a : s.amplitudes()) put(a.real());
  for (const qsim::cplx& a : s.amplitudes()) put(a.imag());
  return d;
}

qsim::StateVector decode_state(const QuantizedDescription& d) {
  const std::size_t dim = std::size_t{1} << d.q;
  const auto p = static_cast<std::size_t>(d.p);
  if (d.bits.size() != quantized_length_bits(d.q, d.p)) {
    throw InputError("quantized description has the wrong length");
  }
  const double unit = std::ldexp(1.0, 1 - d.p);
  auto get = [&](std::size_t index) {
    const std::uint64_t raw = d.bits.read_uint(kQuantizedHeaderBits + index * p, p);
    std::int64_t v = static_cast<std::int64_t>(raw);
    if (raw >> (p - 1)) v -= static_cast<std::int64_t>(std::uint64_t{1} << p);
    return static_cast<double>(v) * unit;
  };
  std::vector<qsim::cplx> amps(dim);
  for (std::size_t i = 0; i < dim; ++i) amps[i] = {get(i), get(dim + i)};
  try {
    return qsim::StateVector::from_amplitudes(std::move(amps), true);
  } catch (const InputError&) {
    throw InputError("quantized description decodes to the zero vector");
  }
}

QuantizedDescription parse_quantized(const codes::BitString& bits) {
  if (bits.size() < kQuantizedHeaderBits) {
    throw DecodeError("quantized description shorter than its header", bits.size());
  }
  const auto q = static_cast<int>(bits.read_uint(0, 16));
  const auto p = static_cast<int>(bits.read_uint(16, 16));
  if (bits.read_uint(32, 32) != 0) throw DecodeError("reserved header field is not zero", 32);
  if (q > qsim::kMaxStateQubits) throw DecodeError("qubit count exceeds the cap", 0);
  if (p < 2 || p > kMaxComponentBits) throw DecodeError("bits per component out of range", 16);
  const std::size_t length = quantized_length_bits(q, p);
  if (bits.size() < length) throw DecodeError("quantized payload truncated", bits.size());
  for (std::size_t i = length; i < bits.size(); ++i) {
    if (bits[i]) throw DecodeError("nonzero padding after the payload", i);
  }
  return {q, p, bits.slice(0, length)};
}

QuantizedDescription parse_quantized(std::span<const std::uint8_t> bytes) {
  return parse_quantized(codes::BitString::from_bytes(bytes, bytes.size() * 8));
}

}  // namespace qkolab::fingerprint
