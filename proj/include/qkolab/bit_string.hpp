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

#ifndef QKOLAB_BIT_STRING_HPP_
#define QKOLAB_BIT_STRING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qkolab::codes {

/// Packed bit sequence with an explicit length.
///
/// Position 0 is the first (most significant) bit of the text form. Unused
/// bits of the last storage word are always zero, so equality, hashing and
/// popcount work on whole words.
class BitString {
 public:
  BitString() = default;
  /// All-zero string of the given length.
  explicit BitString(std::size_t length);

  /// Parses ASCII '0'/'1'. Throws InputError on any other character.
  static BitString from_string(std::string_view text);
  /// `width` bits of `value`, most significant first.
  static BitString from_uint(std::uint64_t value, std::size_t width);
  /// Unpacks `length` bits from big-endian packed bytes.
  static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t length);

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }

  /// Bounds-checked access; throws std::out_of_range.
  bool at(std::size_t i) const;
  bool operator[](std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  void push_back(bool bit);
  void append(const BitString& other);
  /// Appends the low `width` bits of `value`, most significant first.
  void append_uint(std::uint64_t value, std::size_t width);
  /// Reads `width` <= 64 bits starting at `pos`, most significant first.
  std::uint64_t read_uint(std::size_t pos, std::size_t width) const;
  /// Copy of bits [pos, pos + count).
  BitString slice(std::size_t pos, std::size_t count) const;

  std::size_t popcount() const;
  BitString& operator^=(const BitString& other);
  friend BitString operator^(BitString lhs, const BitString& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  bool operator==(const BitString& other) const = default;

  std::string to_string() const;
  /// Big-endian packing, zero padded to a byte boundary.
  std::vector<std::uint8_t> to_bytes() const;
  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t length_ = 0;
};

std::size_t hamming_distance(const BitString& a, const BitString& b);

/// Number of bits needed to write values 0..count-1 (0 for count <= 1).
std::size_t bits_for(std::size_t count);

}  // namespace qkolab::codes

#endif  // QKOLAB_BIT_STRING_HPP_
