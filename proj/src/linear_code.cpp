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

#include "qkolab/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <limits>
#include <utility>

#include "qkolab/errors.hpp"
#include "qkolab/random.hpp"

namespace qkolab::codes {

std::string to_string(VerificationMode mode) {
  switch (mode) {
    case VerificationMode::kExhaustive:
      return "exhaustive";
    case VerificationMode::kSampled:
      return "sampled";
    case VerificationMode::kUnverified:
      break;
  }
  return "unverified";
}

LinearCode::LinearCode(std::string name, std::vector<BitString> generator_rows)
    : name_(std::move(name)), rows_(std::move(generator_rows)) {
  if (rows_.empty()) throw InputError("linear code needs at least one generator row");
  const std::size_t width = rows_.front().size();
  for (const auto& row : rows_) {
    if (row.size() != width) throw InputError("generator rows have different lengths");
  }
  if (width < rows_.size()) {
    throw InputError("codeword length m=" + std::to_string(width) +
                     " is shorter than n=" + std::to_string(rows_.size()));
  }

  // Row-reduce G while recording the row operations in `ops`; afterwards
  // ops * G has an identity at the pivot columns.
  const std::size_t k = rows_.size();
  std::vector<BitString> reduced = rows_;
  std::vector<BitString> ops;
  ops.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    BitString e(k);
    e.set(i, true);
    ops.push_back(std::move(e));
  }
  std::size_t col = 0;
  for (std::size_t r = 0; r < k; ++r) {
    std::size_t pivot_row = k;
    for (; col < width; ++col) {
      for (std::size_t i = r; i < k; ++i) {
        if (reduced[i][col]) {
          pivot_row = i;
          break;
        }
      }
      if (pivot_row != k) break;
    }
    if (pivot_row == k) throw InputError("generator rows are linearly dependent over GF(2)");
    std::swap(reduced[r], reduced[pivot_row]);
    std::swap(ops[r], ops[pivot_row]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i != r && reduced[i][col]) {
        reduced[i] ^= reduced[r];
        ops[i] ^= ops[r];
      }
    }
    pivots_.push_back(col);
    ++col;
  }
  inverse_rows_ = std::move(ops);
}

std::optional<double> LinearCode::delta_verified() const {
  if (!verification_ || verification_->mode == VerificationMode::kUnverified) return std::nullopt;
  return verification_->delta;
}

LinearCode LinearCode::with_verification(const DistanceVerification& v) const {
  LinearCode copy = *this;
  copy.verification_ = v;
  return copy;
}

BitString LinearCode::encode(const BitString& x) const {
  if (x.size() != n()) {
    throw InputError("encode: message has " + std::to_string(x.size()) + " bits, code expects " +
                     std::to_string(n()));
  }
  BitString out(m());
  for (std::size_t i = 0; i < n(); ++i) {
    if (x[i]) out ^= rows_[i];
  }
  return out;
}

std::optional<BitString> LinearCode::message_of(const BitString& word) const {
  if (word.size() != m()) {
    throw InputError("membership test: word has " + std::to_string(word.size()) +
                     " bits, code length is " + std::to_string(m()));
  }
  BitString x(n());
  for (std::size_t j = 0; j < pivots_.size(); ++j) {
    if (word[pivots_[j]]) x ^= inverse_rows_[j];
  }
  if (encode(x) != word) return std::nullopt;
  return x;
}

namespace {

void check_message_bits(std::size_t n) {
  if (n < 1 || n > 16) {
    throw InputError("message length n=" + std::to_string(n) + " outside [1, 16]");
  }
}

std::vector<BitString> column_rows(std::size_t n, std::size_t first_column) {
  const std::size_t columns = std::size_t{1} << n;
  std::vector<BitString> rows(n, BitString(columns - first_column));
  for (std::size_t z = first_column; z < columns; ++z) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((z >> (n - 1 - i)) & 1U) rows[i].set(z - first_column, true);
    }
  }
  return rows;
}

DistanceCheck default_check(std::size_t n) {
  return n <= kExhaustiveMaxMessageBits ? DistanceCheck::exhaustive() : DistanceCheck::sampled(256);
}

}  // namespace

LinearCode hadamard_code(std::size_t n) {
  check_message_bits(n);
  LinearCode code("hadamard", column_rows(n, 0));
  return code.with_verification(verify_distance(code, default_check(n)));
}

LinearCode simplex_code(std::size_t n) {
  check_message_bits(n);
  LinearCode code("simplex", column_rows(n, 1));
  return code.with_verification(verify_distance(code, default_check(n)));
}

LinearCode concatenated_code(std::size_t n, std::size_t target_rate_c) {
  if (n < 1) throw InputError("concatenated code needs n >= 1");
  if (target_rate_c < 2) {
    throw InputError("concatenated code needs rate c >= 2, got " + std::to_string(target_rate_c));
  }
  if (n > 4096 || target_rate_c > (std::size_t{1} << 20) / n) {
    throw InputError("concatenated code with n=" + std::to_string(n) +
                     ", c=" + std::to_string(target_rate_c) + " exceeds m <= 2^20");
  }
  const std::size_t m = n * target_rate_c;
  const std::string name = "concatenated-c" + std::to_string(target_rate_c);
  if (n == 1) {
    BitString ones(m);
    for (std::size_t j = 0; j < m; ++j) ones.set(j, true);
    LinearCode code(name, {ones});
    return code.with_verification(verify_distance(code, DistanceCheck::exhaustive()));
  }

  constexpr std::size_t kCandidates = 16;
  const std::uint64_t base_seed = splitmix64((std::uint64_t{n} << 32) ^ target_rate_c);
  const DistanceCheck check =
      n <= kExhaustiveMaxMessageBits ? DistanceCheck::exhaustive() : DistanceCheck::sampled(1024);
  std::optional<LinearCode> best;
  DistanceVerification best_v;
  for (std::size_t candidate = 0; candidate < kCandidates; ++candidate) {
    Rng rng(derive_seed(base_seed, candidate));
    std::vector<BitString> rows(n, BitString(m));
    for (std::size_t i = 0; i < n; ++i) {
      rows[i].set(i, true);
      for (std::size_t j = n; j < m; ++j) rows[i].set(j, rng.bit());
    }
    LinearCode code(name, std::move(rows));
    const DistanceVerification v = verify_distance(code, check);
    if (!best || v.min_distance > best_v.min_distance) {
      best = std::move(code);
      best_v = v;
    }
  }
  return best->with_verification(best_v);
}

LinearCode code_by_name(const std::string& name, std::size_t n, std::size_t rate_c) {
  if (name == "hadamard") return hadamard_code(n);
  if (name == "simplex") return simplex_code(n);
  if (name == "concatenated") return concatenated_code(n, rate_c);
  throw InputError("unknown code '" + name + "' (expected hadamard, simplex or concatenated)");
}

DistanceVerification verify_distance(const LinearCode& code, const DistanceCheck& check) {
  const std::size_t n = code.n();
  const std::size_t m = code.m();
  const auto& rows = code.generator();
  DistanceVerification out;
  std::size_t min_weight = std::numeric_limits<std::size_t>::max();

  if (check.kind == DistanceCheck::Kind::kExhaustive) {
    if (n > kExhaustiveMaxMessageBits) {
      throw CapError("exhaustive distance verification needs 2^n <= 4096 (n=" + std::to_string(n) +
                     "); use sampled mode instead");
    }
    // Gray-code walk: consecutive messages differ in one bit, so each
    // codeword is the previous one xor a single generator row.
    BitString word(m);
    const std::size_t count = std::size_t{1} << n;
    for (std::size_t g = 1; g < count; ++g) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(g));
      word ^= rows[n - 1 - bit];
      min_weight = std::min(min_weight, word.popcount());
    }
    out.mode = VerificationMode::kExhaustive;
    out.codewords_checked = count - 1;
  } else {
    if (check.samples == 0) throw InputError("sampled distance verification needs samples >= 1");
    Rng rng(check.seed);
    for (std::size_t s = 0; s < check.samples; ++s) {
      BitString x(n);
      do {
        for (std::size_t i = 0; i < n; ++i) x.set(i, rng.bit());
      } while (x.popcount() == 0);
      min_weight = std::min(min_weight, code.encode(x).popcount());
    }
    out.mode = VerificationMode::kSampled;
    out.codewords_checked = check.samples;
  }
  out.min_distance = min_weight;
  out.delta = 1.0 - static_cast<double>(min_weight) / static_cast<double>(m);
  return out;
}

namespace {

std::string to_hex(const BitString& row) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (std::uint8_t byte : row.to_bytes()) {
    s.push_back(kDigits[byte >> 4]);
    s.push_back(kDigits[byte & 15]);
  }
  return s;
}

BitString from_hex(const std::string& hex, std::size_t bits) {
  if (hex.size() != 2 * ((bits + 7) / 8)) {
    throw InputError("generator row hex has " + std::to_string(hex.size()) + " digits, expected " +
                     std::to_string(2 * ((bits + 7) / 8)));
  }
  std::vector<std::uint8_t> bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    unsigned value = 0;
    if (std::sscanf(hex.substr(i, 2).c_str(), "%2x", &value) != 1) {
      throw InputError("generator row is not hexadecimal: " + hex);
    }
    bytes.push_back(static_cast<std::uint8_t>(value));
  }
  return BitString::from_bytes(bytes, bits);
}

}  // namespace

nlohmann::json code_descriptor(const LinearCode& code) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : code.generator()) rows.push_back(to_hex(row));
  nlohmann::json d = {{"name", code.name()},
                      {"n", code.n()},
                      {"m", code.m()},
                      {"generator", rows},
                      {"delta_verified", nullptr},
                      {"verification_mode", "unverified"}};
  if (const auto& v = code.verification(); v && v->mode != VerificationMode::kUnverified) {
    d["delta_verified"] = v->delta;
    d["verification_mode"] = to_string(v->mode);
    d["min_distance"] = v->min_distance;
    d["codewords_checked"] = v->codewords_checked;
  }
  return d;
}

LinearCode code_from_descriptor(const nlohmann::json& d) {
  try {
    const auto n = d.at("n").get<std::size_t>();
    const auto m = d.at("m").get<std::size_t>();
    const auto& hex_rows = d.at("generator");
    if (!hex_rows.is_array() || hex_rows.size() != n) {
      throw InputError("code descriptor: generator must list n=" + std::to_string(n) + " rows");
    }
    std::vector<BitString> rows;
    for (const auto& h : hex_rows) rows.push_back(from_hex(h.get<std::string>(), m));
    LinearCode code(d.at("name").get<std::string>(), std::move(rows));
    const std::string mode = d.value("verification_mode", "unverified");
    if (mode == "unverified" || d.at("delta_verified").is_null()) return code;
    DistanceVerification v;
    v.delta = d.at("delta_verified").get<double>();
    v.mode = mode == "exhaustive" ? VerificationMode::kExhaustive : VerificationMode::kSampled;
    if (mode != "exhaustive" && mode != "sampled") {
      throw InputError("code descriptor: unknown verification_mode '" + mode + "'");
    }
    v.min_distance = d.value("min_distance", static_cast<std::size_t>((1.0 - v.delta) * m + 0.5));
    v.codewords_checked = d.value("codewords_checked", std::size_t{0});
    return code.with_verification(v);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("code descriptor: ") + e.what());
  }
}

}  // namespace qkolab::codes
