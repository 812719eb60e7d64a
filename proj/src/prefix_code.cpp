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

#include "qkolab/prefix_code.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qkolab/errors.hpp"

namespace qkolab::codes {
namespace {

// Unsigned fixed point with kFracBits fractional bits, wide enough to hold
// any finite double below 2^64 exactly (subnormals need 1126 bits).
class Fixed {
 public:
  static constexpr int kFracBits = 1152;
  static constexpr std::size_t kLimbs = kFracBits / 64 + 2;

  Fixed() : limbs_(kLimbs, 0) {}

  static Fixed from_double(double value) {
    Fixed f;
    int exponent = 0;
    const double mantissa = std::frexp(value, &exponent);
    const auto integer = static_cast<std::uint64_t>(std::ldexp(mantissa, 53));
    // value = integer * 2^(exponent - 53)
    f.limbs_[0] = integer;
    f.shift_left(kFracBits + exponent - 53);
    return f;
  }

  Fixed& operator+=(const Fixed& o) {
    unsigned carry = 0;
    for (std::size_t i = 0; i < kLimbs; ++i) {
      const std::uint64_t a = limbs_[i];
      const std::uint64_t sum = a + o.limbs_[i] + carry;
      carry = (sum < a || (carry && sum == a)) ? 1 : 0;
      limbs_[i] = sum;
    }
    return *this;
  }

  Fixed& operator-=(const Fixed& o) {
    unsigned borrow = 0;
    for (std::size_t i = 0; i < kLimbs; ++i) {
      const std::uint64_t a = limbs_[i];
      const std::uint64_t diff = a - o.limbs_[i] - borrow;
      borrow = (a < o.limbs_[i] || (borrow && a == o.limbs_[i])) ? 1 : 0;
      limbs_[i] = diff;
    }
    return *this;
  }

  void shift_left(int count) {
    const auto words = static_cast<std::size_t>(count / 64);
    const int bits = count % 64;
    for (std::size_t i = kLimbs; i-- > 0;) {
      std::uint64_t v = 0;
      if (i >= words) {
        v = limbs_[i - words] << bits;
        if (bits != 0 && i > words) v |= limbs_[i - words - 1] >> (64 - bits);
      }
      limbs_[i] = v;
    }
  }

  friend bool operator<(const Fixed& a, const Fixed& b) {
    for (std::size_t i = kLimbs; i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
    }
    return false;
  }

 private:
  std::vector<std::uint64_t> limbs_;
};

}  // namespace

// Works on the exactly renormalized distribution p_i / sum(p), so inputs
// whose double sum is off by rounding still give a prefix-free code.
PrefixCode shannon_code(std::span<const double> p) {
  if (p.empty()) throw InputError("shannon_code: empty distribution");
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] > 0.0) || !std::isfinite(p[i])) {
      throw InputError("shannon_code: p[" + std::to_string(i) + "] is not positive");
    }
    if (i > 0 && p[i] > p[i - 1]) {
      throw InputError("shannon_code: probabilities not sorted descending at index " +
                       std::to_string(i));
    }
    total += p[i];
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InputError("shannon_code: probabilities sum to " + std::to_string(total));
  }

  std::vector<Fixed> exact;
  Fixed sum;
  for (double pi : p) {
    exact.push_back(Fixed::from_double(pi));
    sum += exact.back();
  }

  PrefixCode code;
  Fixed cumulative;
  for (std::size_t i = 0; i < p.size(); ++i) {
    // Smallest l with p_i * 2^l >= sum.
    int exponent = 0;
    std::frexp(p[i], &exponent);
    int length = std::max(0, -exponent);
    Fixed scaled = exact[i];
    scaled.shift_left(length);
    while (scaled < sum) {
      scaled.shift_left(1);
      ++length;
    }
    // Binary expansion of cumulative / sum, by restoring division.
    BitString word(static_cast<std::size_t>(length));
    Fixed rem = cumulative;
    for (int k = 0; k < length; ++k) {
      rem.shift_left(1);
      if (!(rem < sum)) {
        word.set(static_cast<std::size_t>(k), true);
        rem -= sum;
      }
    }
    code.codewords.push_back(std::move(word));
    code.lengths.push_back(static_cast<std::size_t>(length));
    cumulative += exact[i];
  }
  return code;
}

double kraft_sum(std::span<const std::size_t> lengths) {
  double sum = 0.0;
  for (std::size_t l : lengths) sum += std::ldexp(1.0, -static_cast<int>(l));
  return sum;
}

bool is_prefix_free(std::span<const BitString> codewords) {
  std::vector<std::string> text;
  text.reserve(codewords.size());
  for (const auto& w : codewords) text.push_back(w.to_string());
  std::sort(text.begin(), text.end());
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i].compare(0, text[i - 1].size(), text[i - 1]) == 0) return false;
  }
  return true;
}

}  // namespace qkolab::codes
