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

#include "qkolab/bit_string.hpp"

#include <bit>
#include <stdexcept>

#include "qkolab/errors.hpp"

namespace qkolab::codes {

BitString::BitString(std::size_t length) : words_((length + 63) / 64, 0), length_(length) {}

BitString BitString::from_string(std::string_view text) {
  BitString out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      out.set(i, true);
    } else if (text[i] != '0') {
      throw InputError("bit string may only contain '0' and '1', got '" + std::string(1, text[i]) +
                       "' at position " + std::to_string(i));
    }
  }
  return out;
}

BitString BitString::from_uint(std::uint64_t value, std::size_t width) {
  BitString out;
  out.append_uint(value, width);
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t length) {
  if (length > bytes.size() * 8) {
    throw InputError("from_bytes: " + std::to_string(length) + " bits requested from " +
                     std::to_string(bytes.size()) + " bytes");
  }
  BitString out(length);
  for (std::size_t i = 0; i < length; ++i) {
    if ((bytes[i >> 3] >> (7 - (i & 7))) & 1U) out.set(i, true);
  }
  return out;
}

bool BitString::at(std::size_t i) const {
  if (i >= length_) {
    throw std::out_of_range("BitString index " + std::to_string(i) + " >= length " +
                            std::to_string(length_));
  }
  return (*this)[i];
}

void BitString::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

void BitString::flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

void BitString::push_back(bool bit) {
  if ((length_ & 63) == 0) words_.push_back(0);
  ++length_;
  if (bit) set(length_ - 1, true);
}

void BitString::append(const BitString& other) {
  for (std::size_t i = 0; i < other.size(); ++i) push_back(other[i]);
}

void BitString::append_uint(std::uint64_t value, std::size_t width) {
  for (std::size_t k = width; k-- > 0;) {
    push_back(k < 64 && ((value >> k) & 1U));
  }
}

std::uint64_t BitString::read_uint(std::size_t pos, std::size_t width) const {
  if (width > 64 || pos + width > length_) {
    throw std::out_of_range("read_uint: bits [" + std::to_string(pos) + ", " +
                            std::to_string(pos + width) + ") outside length " +
                            std::to_string(length_));
  }
  std::uint64_t v = 0;
  for (std::size_t k = 0; k < width; ++k) v = (v << 1) | ((*this)[pos + k] ? 1U : 0U);
  return v;
}

BitString BitString::slice(std::size_t pos, std::size_t count) const {
  if (pos + count > length_) throw std::out_of_range("slice outside bit string");
  BitString out(count);
  for (std::size_t i = 0; i < count; ++i) {
    if ((*this)[pos + i]) out.set(i, true);
  }
  return out;
}

std::size_t BitString::popcount() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BitString& BitString::operator^=(const BitString& other) {
  if (other.length_ != length_) {
    throw InputError("xor of bit strings with lengths " + std::to_string(length_) + " and " +
                     std::to_string(other.length_));
  }
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::string BitString::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
  std::vector<std::uint8_t> out((length_ + 7) / 8, 0);
  for (std::size_t i = 0; i < length_; ++i) {
    if ((*this)[i]) out[i >> 3] |= static_cast<std::uint8_t>(0x80U >> (i & 7));
  }
  return out;
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) {
    throw InputError("hamming distance of strings with lengths " + std::to_string(a.size()) +
                     " and " + std::to_string(b.size()));
  }
  std::size_t d = 0;
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w)
    d += static_cast<std::size_t>(std::popcount(wa[w] ^ wb[w]));
  return d;
}

std::size_t bits_for(std::size_t count) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < count) ++bits;
  return bits;
}

}  // namespace qkolab::codes
