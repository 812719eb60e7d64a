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

#ifndef QKOLAB_RANDOM_HPP_
#define QKOLAB_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace qkolab {

/// SplitMix64 finalizer. Used to derive independent per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for trial `index` of a run keyed by `master_seed`.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

/// Deterministic random source. The engine (mt19937_64) is fully specified by
/// the standard; the conversions to doubles and normals are implemented here
/// rather than through <random> distributions, whose algorithms are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  bool bit() { return (engine_() >> 63) != 0; }
  /// Uniform on [0, bound), unbiased. bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Standard normal (Marsaglia polar method).
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qkolab

#endif  // QKOLAB_RANDOM_HPP_
