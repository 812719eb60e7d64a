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

#include "qkolab/compressor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qkolab/errors.hpp"

namespace qkolab::codes {
namespace {

constexpr std::uint8_t kVersion = 1;
constexpr std::uint8_t kModeEmpty = 0;
constexpr std::uint8_t kModeStored = 1;
constexpr std::uint8_t kModeCtw = 2;

// Nodes beyond this count are not created; the path simply stops early.
// Encoder and decoder hit the limit at the same bit, so coding stays exact.
constexpr std::size_t kMaxNodes = std::size_t{1} << 21;

double log2_sum(double a, double b) {
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp2(lo - hi)) / std::numbers::ln2;
}

// Context-tree weighting over the previous kCtwDepth bits with
// Krichevsky-Trofimov leaf estimators. All probabilities are kept as log2.
class CtwModel {
 public:
  CtwModel() {
    nodes_.reserve(1024);
    nodes_.emplace_back();
  }

  // 16-bit probability that the next bit is 1, in [1, 65535].
  std::uint32_t predict() {
    collect_path();
    for (int b = 0; b < 2; ++b) {
      double below = 0.0;
      for (std::size_t d = path_len_; d-- > 0;) {
        const Node& node = nodes_[path_[d]];
        const std::uint32_t nb = b ? node.n1 : node.n0;
        const double lpe =
            node.lpe + std::log2((nb + 0.5) / (static_cast<double>(node.n0 + node.n1) + 1.0));
        new_lpe_[b][d] = lpe;
        double lpw = lpe;
        if (d + 1 < path_len_) {
          const int taken = context_bit(d);
          const std::int32_t other = node.child[1 - taken];
          const double other_lpw = other < 0 ? 0.0 : nodes_[other].lpw;
          lpw = -1.0 + log2_sum(lpe, below + other_lpw);
        }
        new_lpw_[b][d] = lpw;
        below = lpw;
      }
    }
    const double p1 = 1.0 / (1.0 + std::exp2(new_lpw_[0][0] - new_lpw_[1][0]));
    const double scaled = std::nearbyint(p1 * 65536.0);
    return static_cast<std::uint32_t>(std::clamp(scaled, 1.0, 65535.0));
  }

  // Must follow predict() for the same position.
  void update(int bit) {
    for (std::size_t d = 0; d < path_len_; ++d) {
      Node& node = nodes_[path_[d]];
      (bit ? node.n1 : node.n0) += 1;
      node.lpe = new_lpe_[bit][d];
      node.lpw = new_lpw_[bit][d];
    }
    history_ = (history_ << 1) | static_cast<std::uint32_t>(bit);
  }

 private:
  struct Node {
    std::uint32_t n0 = 0;
    std::uint32_t n1 = 0;
    double lpe = 0.0;
    double lpw = 0.0;
    std::array<std::int32_t, 2> child = {-1, -1};
  };

  // Bit that selects the child below depth d: the (d+1)-th most recent bit.
  int context_bit(std::size_t d) const { return static_cast<int>((history_ >> d) & 1U); }

  void collect_path() {
    std::int32_t index = 0;
    path_[0] = 0;
    path_len_ = 1;
    for (std::size_t d = 0; d < static_cast<std::size_t>(kCtwDepth); ++d) {
      const int bit = context_bit(d);
      std::int32_t next = nodes_[index].child[bit];
      if (next < 0) {
        if (nodes_.size() >= kMaxNodes) break;
        next = static_cast<std::int32_t>(nodes_.size());
        nodes_[index].child[bit] = next;
        nodes_.emplace_back();
      }
      index = next;
      path_[path_len_++] = index;
    }
  }

  std::vector<Node> nodes_;
  std::uint32_t history_ = 0;
  std::array<std::int32_t, kCtwDepth + 1> path_{};
  std::size_t path_len_ = 0;
  std::array<std::array<double, kCtwDepth + 1>, 2> new_lpe_{};
  std::array<std::array<double, kCtwDepth + 1>, 2> new_lpw_{};
};

std::uint32_t split_point(std::uint32_t x1, std::uint32_t x2, std::uint32_t p1) {
  const std::uint32_t range = x2 - x1;
  return x1 + (range >> 16) * p1 + (((range & 0xffffU) * p1) >> 16);
}

BitString ctw_encode(const BitString& input, std::size_t give_up_after) {
  CtwModel model;
  BitString out;
  std::uint32_t x1 = 0;
  std::uint32_t x2 = 0xffffffffU;
  for (std::size_t i = 0; i < input.size(); ++i) {
    const int bit = input[i] ? 1 : 0;
    const std::uint32_t xmid = split_point(x1, x2, model.predict());
    model.update(bit);
    if (bit) {
      x2 = xmid;
    } else {
      x1 = xmid + 1;
    }
    while (((x1 ^ x2) & 0x80000000U) == 0) {
      out.push_back((x2 >> 31) != 0);
      x1 <<= 1;
      x2 = (x2 << 1) | 1U;
    }
    if (out.size() > give_up_after) return out;
  }
  // x1 < 2^31 <= x2 here, so a single 1 (zero-padded by the decoder) lands
  // inside the interval; if x1 == 0 the padding alone does.
  if (x1 != 0) out.push_back(true);
  return out;
}

BitString ctw_decode(const BitString& payload, std::size_t payload_offset, std::size_t length) {
  CtwModel model;
  BitString out(length);
  std::size_t pos = 0;
  auto next_bit = [&]() -> std::uint32_t {
    const std::size_t i = pos++;
    return i < payload.size() && payload[i] ? 1U : 0U;
  };
  std::uint32_t x1 = 0;
  std::uint32_t x2 = 0xffffffffU;
  std::uint32_t x = 0;
  for (int i = 0; i < 32; ++i) x = (x << 1) | next_bit();
  for (std::size_t i = 0; i < length; ++i) {
    const std::uint32_t xmid = split_point(x1, x2, model.predict());
    const int bit = x <= xmid ? 1 : 0;
    model.update(bit);
    out.set(i, bit != 0);
    if (bit) {
      x2 = xmid;
    } else {
      x1 = xmid + 1;
    }
    while (((x1 ^ x2) & 0x80000000U) == 0) {
      x1 <<= 1;
      x2 = (x2 << 1) | 1U;
      x = (x << 1) | next_bit();
    }
  }
  // Every payload bit must have been needed; otherwise the container is
  // longer than anything compress() produces.
  if (payload.size() > pos) {
    throw DecodeError("compressed payload has trailing bits", payload_offset + pos);
  }
  return out;
}

}  // namespace

BitString compress(const BitString& input) {
  if (input.size() > 0xffffffffULL) throw InputError("compress: input exceeds 2^32 - 1 bits");
  BitString out;
  if (input.empty()) {
    out.append_uint((kVersion << 4) | kModeEmpty, 8);
    out.append_uint(0, 32);
    return out;
  }
  const BitString coded = ctw_encode(input, input.size());
  const bool use_ctw = coded.size() < input.size();
  out.append_uint((kVersion << 4) | (use_ctw ? kModeCtw : kModeStored), 8);
  out.append_uint(input.size(), 32);
  out.append(use_ctw ? coded : input);
  return out;
}

BitString decompress(const BitString& container) {
  if (container.size() < kCompressorHeaderBits) {
    throw DecodeError("compressed container shorter than its 40-bit header", container.size());
  }
  const auto tag = static_cast<std::uint8_t>(container.read_uint(0, 8));
  if ((tag >> 4) != kVersion) throw DecodeError("unsupported compressor version", 0);
  const std::size_t length = container.read_uint(8, 32);
  const BitString payload =
      container.slice(kCompressorHeaderBits, container.size() - kCompressorHeaderBits);
  switch (tag & 0x0f) {
    case kModeEmpty:
      if (length != 0 || !payload.empty()) {
        throw DecodeError("empty-mode container carries data", 8);
      }
      return {};
    case kModeStored:
      if (payload.size() != length) {
        throw DecodeError("stored payload length does not match header", kCompressorHeaderBits);
      }
      return payload;
    case kModeCtw:
      return ctw_decode(payload, kCompressorHeaderBits, length);
    default:
      throw DecodeError("unknown compressor mode", 4);
  }
}

ComplexitySurrogate kcl_upper(const BitString& w) {
  return {w.size(), compress(w).size(), kCompressorMethodId};
}

}  // namespace qkolab::codes
