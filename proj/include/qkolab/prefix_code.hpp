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

#ifndef QKOLAB_PREFIX_CODE_HPP_
#define QKOLAB_PREFIX_CODE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "qkolab/bit_string.hpp"

namespace qkolab::codes {

struct PrefixCode {
  std::vector<BitString> codewords;
  std::vector<std::size_t> lengths;
};

/// Shannon code for a descending probability list. l_i is the smallest l with
/// 2^-l <= p_i; codeword i is the first l_i bits of F = p_0 + ... + p_(i-1),
/// with the cumulative sum kept exactly. p = (1) yields one empty codeword.
/// Throws InputError for non-positive, unsorted or non-normalized input.
PrefixCode shannon_code(std::span<const double> p);

/// Sum of 2^-l_i.
double kraft_sum(std::span<const std::size_t> lengths);

bool is_prefix_free(std::span<const BitString> codewords);

}  // namespace qkolab::codes

#endif  // QKOLAB_PREFIX_CODE_HPP_
