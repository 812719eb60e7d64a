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

#include "qkolab/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qkolab/errors.hpp"
#include "qkolab/measures.hpp"
#include "qkolab/parallel.hpp"
#include "qkolab/quantized.hpp"
#include "qkolab/random.hpp"

namespace qkolab::complexity {

nlohmann::json ComplexityReport::to_json() const {
  return {{"subject", subject},
          {"raw_bits", raw_bits},
          {"knet_upper_bits", knet_upper_bits},
          {"cbe_upper_bits", cbe_upper_bits},
          {"encoding_version", encoding_version},
          {"eps", eps},
          {"method_id", method_id}};
}

ComplexityReport knet_upper(const Circuit& c) {
  const CircuitEncoding flat = encode_circuit(c, EncodingForm::kFlat);
  const CircuitEncoding compact = encode_circuit(c, EncodingForm::kCompact);
  const std::size_t flat_bits = codes::kcl_upper(flat.payload).compressed_length_bits;
  const std::size_t compact_bits = codes::kcl_upper(compact.payload).compressed_length_bits;
  ComplexityReport r;
  r.subject = "circuit";
  r.raw_bits = flat.payload.size();
  r.knet_upper_bits = std::min(flat_bits, compact_bits);
  r.encoding_version = compact_bits < flat_bits ? compact.format_version : flat.format_version;
  if (c.basis().kind == qsim::GateBasis::Kind::kQuantizedRotation) {
    r.eps = std::ldexp(1.0, -c.basis().p);
  }
  return r;
}

ComplexityReport cbe_upper_bits(const StateVector& s, int p) {
  const auto d = fingerprint::quantize_state_bits(s, p);
  ComplexityReport r;
  r.subject = "state";
  r.raw_bits = d.length_bits();
  r.cbe_upper_bits = codes::kcl_upper(d.bits).compressed_length_bits;
  return r;
}

ComplexityReport cbe_upper(const StateVector& s, double eps_a) {
  ComplexityReport r = cbe_upper_bits(s, fingerprint::component_bits_for(eps_a));
  r.eps = eps_a;
  return r;
}

StateVector purify(const DensityMatrix& r) {
  if (2 * r.q() > qsim::kMaxStateQubits) {
    throw CapError("purification of a " + std::to_string(r.q()) + "-qubit state exceeds 20 qubits");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(r.matrix());
  const auto dim = static_cast<Eigen::Index>(r.dim());
  std::vector<qsim::cplx> amps(r.dim() * r.dim());
  // Eigenvalues at round-off level would add spurious Schmidt terms of size sqrt(1e-16).
  const double cut = 64.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double p = solver.eigenvalues()(k);
    if (p < -tol::kEigenFloor) throw InputError("purify: matrix is not positive semidefinite");
    if (p <= cut) continue;
    Eigen::VectorXcd u = solver.eigenvectors().col(k);
    Eigen::Index top = 0;
    u.cwiseAbs().maxCoeff(&top);
    u *= std::conj(u(top)) / std::abs(u(top));
    const double w = std::sqrt(p);
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        amps[static_cast<std::size_t>(i * dim + j)] += w * u(i) * u(j);
      }
    }
  }
  return StateVector::from_amplitudes(std::move(amps), true);
}

MixedComplexityResult mixed_complexity_upper(const DensityMatrix& r,
                                             const std::vector<PurificationCandidate>& candidates,
                                             double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) throw InputError("eps must lie in [0, 1)");
  MixedComplexityResult out;
  bool any = false;
  for (const auto& cand : candidates) {
    if (cand.circuit.q() > qsim::kMaxStateQubits) {
      throw CapError("candidate '" + cand.name + "' exceeds the 20-qubit simulation cap");
    }
    const StateVector s = qsim::apply_circuit(cand.circuit, StateVector::zero(cand.circuit.q()));
    const DensityMatrix reduced = qsim::partial_trace(s, cand.system_qubits);
    if (reduced.dim() != r.dim()) {
      throw InputError("candidate '" + cand.name + "' has the wrong number of system qubits");
    }
    CandidateResult cr;
    cr.name = cand.name;
    cr.uhlmann_fidelity = qsim::uhlmann_fidelity(r, reduced);
    cr.admitted = cr.uhlmann_fidelity * cr.uhlmann_fidelity >= 1.0 - eps - tol::kEigenFloor;
    cr.knet_upper_bits = knet_upper(cand.circuit).knet_upper_bits;
    if (cr.admitted && (!any || cr.knet_upper_bits < out.bits)) {
      out.bits = cr.knet_upper_bits;
      out.best = cr.name;
      any = true;
    }
    out.candidates.push_back(std::move(cr));
  }
  if (!any) throw InputError("no candidate purification reaches F^2 >= 1 - eps");
  return out;
}

Circuit bell_pair_circuit(std::size_t n) {
  if (n < 1 || n > (std::size_t{1} << 15)) throw CapError("bell_pair_circuit needs 1 <= n <= 2^15");
  Circuit c(static_cast<int>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    const int a = static_cast<int>(2 * i);
    c.h(a);
    c.cnot(a, a + 1);
  }
  return c;
}

double PolyBound::at(std::size_t t) const { return a * std::pow(static_cast<double>(t), b) + d; }

std::vector<StepReport> track_stepwise(const Circuit& c, const PolyBound& bound) {
  std::vector<StepReport> steps(c.size());
  parallel_for(c.size(), [&](std::size_t i) {
    const std::size_t t = i + 1;
    StepReport& s = steps[i];
    s.t = t;
    s.knet_upper_bits = knet_upper(c.prefix(t)).knet_upper_bits;
    s.bound_bits = bound.at(t);
    s.exceeds = static_cast<double>(s.knet_upper_bits) > s.bound_bits;
  });
  return steps;
}

std::vector<CorpusEntry> make_corpus(std::size_t n, std::size_t size, std::uint64_t seed) {
  static const char* const kFamilies[] = {"short-period", "long-period", "biased", "uniform"};
  std::vector<CorpusEntry> corpus(size);
  for (std::size_t i = 0; i < size; ++i) {
    Rng rng(derive_seed(seed, i));
    const std::size_t family = i % 4;
    codes::BitString x(n);
    if (family < 2) {
      const std::size_t lo = family == 0 ? 1 : 3;
      const std::size_t hi = family == 0 ? 2 : std::max<std::size_t>(3, n / 2);
      const std::size_t period = lo + rng.below(hi - lo + 1);
      std::vector<bool> pattern(period);
      for (std::size_t j = 0; j < period; ++j) pattern[j] = rng.bit();
      for (std::size_t j = 0; j < n; ++j) x.set(j, pattern[j % period]);
    } else if (family == 2) {
      const bool majority = rng.bit();
      for (std::size_t j = 0; j < n; ++j) x.set(j, rng.uniform() < 0.1 ? !majority : majority);
    } else {
      for (std::size_t j = 0; j < n; ++j) x.set(j, rng.bit());
    }
    corpus[i].family = kFamilies[family];
    corpus[i].x = std::move(x);
  }
  return corpus;
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2) throw InputError("spearman needs two equal samples");
  const std::vector<double> ra = average_ranks(a);
  const std::vector<double> rb = average_ranks(b);
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
  const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
  double sab = 0.0;
  double saa = 0.0;
  double sbb = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    sab += (ra[i] - ma) * (rb[i] - mb);
    saa += (ra[i] - ma) * (ra[i] - ma);
    sbb += (rb[i] - mb) * (rb[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

nlohmann::json Observation1Report::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries) {
    rows.push_back({{"family", e.family},
                    {"x", e.x.to_string()},
                    {"kcl_x_bits", e.kx_bits},
                    {"kcl_ex_bits", e.kex_bits}});
  }
  return {{"entries", rows}, {"spearman", spearman}, {"method_id", method_id}};
}

Observation1Report observation1_experiment(const codes::LinearCode& code, std::size_t corpus_size,
                                           std::uint64_t seed) {
  if (corpus_size < 50) {
    throw InputError("observation1 corpus needs at least 50 strings, got " +
                     std::to_string(corpus_size));
  }
  Observation1Report r;
  r.entries = make_corpus(code.n(), corpus_size, seed);
  parallel_for(r.entries.size(), [&](std::size_t i) {
    CorpusEntry& e = r.entries[i];
    e.kx_bits = codes::kcl_upper(e.x).compressed_length_bits;
    e.kex_bits = codes::kcl_upper(code.encode(e.x)).compressed_length_bits;
  });
  std::vector<double> kx;
  std::vector<double> kex;
  for (const auto& e : r.entries) {
    kx.push_back(static_cast<double>(e.kx_bits));
    kex.push_back(static_cast<double>(e.kex_bits));
  }
  r.spearman = spearman(kx, kex);
  return r;
}

}  // namespace qkolab::complexity
