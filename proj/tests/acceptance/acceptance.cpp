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

// Acceptance harness. Each criterion prints one PASS/FAIL line; `--only N`
// runs a single criterion so ctest can report them separately.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "qkolab/circuit.hpp"
#include "qkolab/complexity.hpp"
#include "qkolab/demon.hpp"
#include "qkolab/fingerprint.hpp"
#include "qkolab/linear_code.hpp"
#include "qkolab/measures.hpp"
#include "qkolab/prefix_code.hpp"
#include "qkolab/quantized.hpp"
#include "qkolab/random.hpp"
#include "qkolab/smp.hpp"

namespace {

using qkolab::Rng;
using qkolab::codes::BitString;
using qkolab::qsim::cplx;
using qkolab::qsim::StateVector;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Plain inner product, independent of the library's helpers.
cplx dot(const StateVector& a, const StateVector& b) {
  cplx acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double sigma(double p, double n) { return std::sqrt(p * (1.0 - p) / n); }

Verdict ac1_swap_test() {
  Rng rng(101);
  double worst_closed = 0.0;
  double worst_circuit = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int q = 1 + i % 4;
    const auto a = StateVector::haar_random(q, rng);
    const auto b = StateVector::haar_random(q, rng);
    const double expected = (1.0 + std::norm(dot(a, b))) / 2.0;
    worst_closed = std::max(worst_closed, std::abs(qkolab::qsim::swap_test(a, b).p0 - expected));
    const auto sim = qkolab::qsim::swap_test_simulated(a, b);
    worst_circuit =
        std::max({worst_circuit, std::abs(sim.p0 - expected), std::abs(sim.p1 - (1.0 - expected))});
  }
  return {worst_closed <= 1e-12 && worst_circuit <= 1e-10,
          "max closed-form error " + fmt("%.3g", worst_closed) + ", circuit error " +
              fmt("%.3g", worst_circuit)};
}

Verdict ac2_overlap_bound() {
  std::size_t violations = 0;
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto code = qkolab::codes::hadamard_code(n);
    const double delta = *code.delta_verified();
    std::vector<StateVector> fps;
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
      fps.push_back(qkolab::fingerprint::build_fingerprint(code, BitString::from_uint(x, n)).state);
    }
    for (std::uint64_t x = 0; x < fps.size(); ++x) {
      for (std::uint64_t y = 0; y < fps.size(); ++y) {
        if (x == y) continue;
        ++pairs;
        const double ov = std::abs(dot(fps[x], fps[y]));
        const double lib = qkolab::fingerprint::overlap(code, BitString::from_uint(x, n),
                                                        BitString::from_uint(y, n));
        if (std::abs(ov - 0.5) > 1e-12 || std::abs(lib - 0.5) > 1e-12 || ov > delta + 1e-12) {
          ++violations;
        }
      }
    }
  }
  return {violations == 0,
          std::to_string(pairs) + " ordered pairs, " + std::to_string(violations) + " violations"};
}

Verdict ac3_quantum_error() {
  using namespace qkolab::smp;
  std::string detail;
  bool ok = true;
  for (int k : {1, 3}) {
    ExperimentConfig cfg;
    cfg.n = 4;
    cfg.protocol = Protocol::kQuantum;
    cfg.trials = 100000;
    cfg.k = k;
    cfg.master_seed = 3000 + static_cast<std::uint64_t>(k);
    const ErrorReport r = monte_carlo(cfg);
    const double target = std::pow(0.625, k);
    const bool inside = r.wilson_99.lo <= target && target <= r.wilson_99.hi;
    ok = ok && inside;
    detail += "k=" + std::to_string(k) + ": " + fmt("%.5f", r.error_rate) + " in [" +
              fmt("%.5f", r.wilson_99.lo) + ", " + fmt("%.5f", r.wilson_99.hi) + "] vs " +
              fmt("%.5f", target) + "; ";
  }
  return {ok, detail};
}

Verdict ac4_classical() {
  using namespace qkolab::smp;
  const std::size_t n = 4;
  const double m = 16.0;
  ExperimentConfig cfg;
  cfg.n = n;
  cfg.protocol = Protocol::kClassical;
  cfg.trials = 100000;
  cfg.master_seed = 4004;
  const ErrorReport r = monte_carlo(cfg);
  const double freq = static_cast<double>(r.collision_trials) / static_cast<double>(r.trials);
  const bool freq_ok = std::abs(freq - 1.0 / m) <= 3.0 * sigma(1.0 / m, r.trials);
  const double cond = static_cast<double>(r.false_equal) / static_cast<double>(r.decided);
  const bool cond_ok = std::abs(cond - 0.5) <= 3.0 * sigma(0.5, r.decided);

  std::size_t misclassified = 0;
  for (std::size_t nn = 1; nn <= 4; ++nn) {
    const auto code = qkolab::codes::hadamard_code(nn);
    for (std::uint64_t x = 0; x < (1ULL << nn); ++x) {
      const auto bx = BitString::from_uint(x, nn);
      for (std::uint64_t seed = 0; seed < 64; ++seed) {
        for (auto variant : {ClassicalVariant::single_index(), ClassicalVariant::multi_index(3)}) {
          const auto t = run_classical_equality(bx, bx, code, variant, seed);
          if (t.decision == Decision::kNotEqual) ++misclassified;
        }
      }
    }
  }
  return {freq_ok && cond_ok && misclassified == 0,
          "collision freq " + fmt("%.5f", freq) + " vs 1/16, conditional error " +
              fmt("%.5f", cond) + " over " + std::to_string(r.decided) +
              ", equal-input misclassified " + std::to_string(misclassified)};
}

Verdict ac5_forward() {
  double worst = 1.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto code = qkolab::codes::hadamard_code(n);
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
      const auto bx = BitString::from_uint(x, n);
      const auto hx = qkolab::fingerprint::build_hx_circuit(code, bx);
      const auto full = qkolab::qsim::apply_circuit(hx.circuit, StateVector::zero(hx.circuit.q()));
      const auto data = qkolab::fingerprint::data_register(hx, full);
      const auto ref = qkolab::fingerprint::build_fingerprint(code, bx).state;
      worst = std::min(worst, std::norm(dot(ref, data)));
    }
  }
  return {worst >= 1.0 - 1e-10, "min fidelity " + fmt("%.15f", worst)};
}

Verdict ac6_reverse() {
  using namespace qkolab::fingerprint;
  std::size_t wrong = 0;
  std::size_t accepted = 0;
  std::size_t exact_failures = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto code = qkolab::codes::hadamard_code(n);
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
      const auto bx = BitString::from_uint(x, n);
      const auto r = extract_codeword(build_fingerprint(code, bx).state, code);
      if (r.status != ExtractionStatus::kExact || r.message != bx) ++exact_failures;
    }
  }
  // Perturbations keep fidelity >= 1 - eps to h_x, eps = 1 - delta^2 - 0.05.
  const double delta = 0.5;
  const double eps = 1.0 - delta * delta - 0.05;
  ExtractionOptions opts;
  opts.min_fidelity = exclusion_fidelity(delta, eps);
  // For comparison: accepting any codeword whose fingerprint is as close as
  // the promise (fidelity >= 1 - eps).
  ExtractionOptions naive;
  naive.min_fidelity = 1.0 - eps;
  std::size_t naive_wrong = 0;
  Rng rng(606);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 4);
    const auto code = qkolab::codes::hadamard_code(n);
    BitString x(n);
    for (std::size_t b = 0; b < n; ++b) x.set(b, rng.bit());
    const double f = (1.0 - eps) + eps * rng.uniform();
    const auto s = perturb_to_fidelity(build_fingerprint(code, x).state, f, rng);
    const auto loose = extract_codeword(s, code, naive);
    if (loose.status != ExtractionStatus::kNotACodeword && loose.message != x) ++naive_wrong;
    const auto r = extract_codeword(s, code, opts);
    if (r.status == ExtractionStatus::kNotACodeword) continue;
    ++accepted;
    if (r.message != x) ++wrong;
  }
  return {wrong == 0 && exact_failures == 0,
          "exact-state failures " + std::to_string(exact_failures) + ", perturbed accepted " +
              std::to_string(accepted) + "/10000 at min fidelity " +
              fmt("%.6f", *opts.min_fidelity) + ", wrong codewords " + std::to_string(wrong) +
              " (naive 1-eps threshold: " + std::to_string(naive_wrong) + " wrong)"};
}

Verdict ac7_quantization() {
  using namespace qkolab::fingerprint;
  const double eps = std::ldexp(1.0, -10);
  std::size_t violations = 0;
  std::size_t length_errors = 0;
  double worst_ratio = 0.0;
  Rng rng(707);
  for (int q : {4, 6, 8, 10}) {
    const double bound = std::ldexp(1.0, q - 1) * eps * eps;
    for (int i = 0; i < 10000; ++i) {
      const auto s = StateVector::haar_random(q, rng);
      const auto d = quantize_state(s, eps);
      const std::size_t expected = (std::size_t{1} << (q + 1)) * static_cast<std::size_t>(d.p) + 64;
      if (d.length_bits() != expected) ++length_errors;
      const double deficit = 1.0 - std::norm(dot(s, decode_state(d)));
      worst_ratio = std::max(worst_ratio, deficit / bound);
      if (deficit > bound) ++violations;
    }
  }
  return {violations == 0 && length_errors == 0,
          "violations " + std::to_string(violations) + ", length mismatches " +
              std::to_string(length_errors) + ", worst deficit/bound " + fmt("%.4f", worst_ratio)};
}

Verdict ac8_gap() {
  std::size_t mismatches = 0;
  for (int k : {1, 3}) {
    for (int p : {8, 16}) {
      const auto rows = qkolab::smp::communication_report(1, 10, p, k);
      std::size_t prev_sim = 0;
      for (const auto& row : rows) {
        const std::size_t q = row.n + 1;
        const std::size_t m = std::size_t{1} << row.n;
        if (row.protocol == "quantum") {
          const auto log2m = static_cast<std::size_t>(std::log2(static_cast<double>(m)));
          if (row.qubits != 2 * static_cast<std::size_t>(k) * (log2m + 1)) ++mismatches;
        } else if (row.protocol == "classical-sim") {
          const std::size_t sim =
              2 * ((std::size_t{1} << (q + 1)) * static_cast<std::size_t>(p) + 64);
          if (row.classical_bits != sim) ++mismatches;
          if (prev_sim != 0 && sim - 128 != 2 * (prev_sim - 128)) ++mismatches;
          prev_sim = sim;
        }
      }
    }
  }
  return {mismatches == 0, "formula mismatches " + std::to_string(mismatches)};
}

Verdict ac9_observation1() {
  const auto r =
      qkolab::complexity::observation1_experiment(qkolab::codes::hadamard_code(10), 200, 909);
  return {r.spearman >= 0.9, "spearman " + fmt("%.4f", r.spearman) + " (need >= 0.9)"};
}

Verdict ac10_bell() {
  using namespace qkolab::complexity;
  double worst = 0.0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto c = bell_pair_circuit(n);
    const auto s = qkolab::qsim::apply_circuit(c, StateVector::zero(c.q()));
    std::vector<int> keep;
    for (std::size_t i = 0; i < n; ++i) keep.push_back(static_cast<int>(2 * i));
    const auto r = qkolab::qsim::partial_trace(s, keep);
    const double dim = static_cast<double>(r.dim());
    for (Eigen::Index i = 0; i < r.matrix().rows(); ++i) {
      for (Eigen::Index j = 0; j < r.matrix().cols(); ++j) {
        const cplx target = i == j ? 1.0 / dim : 0.0;
        worst = std::max(worst, std::abs(r.matrix()(i, j) - target));
      }
    }
  }
  const auto k8 = knet_upper(bell_pair_circuit(8)).knet_upper_bits;
  const auto k64 = knet_upper(bell_pair_circuit(64)).knet_upper_bits;
  return {worst <= 1e-12 && k64 <= 2 * k8, "max deviation " + fmt("%.3g", worst) +
                                               ", knet(64) = " + std::to_string(k64) +
                                               " bits, knet(8) = " + std::to_string(k8) + " bits"};
}

Verdict ac11_uhlmann() {
  Rng rng(1111);
  std::size_t violations = 0;
  double worst = 1.0;
  for (int i = 0; i < 10000; ++i) {
    const int sys = 1 + i % 3;
    const int ref = 1 + (i / 3) % 2;
    const double eps = std::ldexp(1.0, -(1 + i % 12));
    const auto psi = StateVector::haar_random(sys + ref, rng);
    const double f = 1.0 - eps * rng.uniform();
    const auto phi = qkolab::fingerprint::perturb_to_fidelity(psi, f, rng);
    const double overlap = std::norm(dot(psi, phi));
    if (overlap < 1.0 - eps) continue;  // by construction this never happens
    std::vector<int> keep;
    for (int k = 0; k < sys; ++k) keep.push_back(k);
    const double u = qkolab::qsim::uhlmann_fidelity(qkolab::qsim::partial_trace(psi, keep),
                                                    qkolab::qsim::partial_trace(phi, keep));
    worst = std::min(worst, u * u - (1.0 - eps));
    if (u * u < 1.0 - eps - 1e-9) ++violations;
  }
  return {violations == 0, "violations " + std::to_string(violations) + ", min F^2 - (1 - eps) " +
                               fmt("%.3g", worst)};
}

Verdict ac12_demon() {
  using namespace qkolab::demon;
  const double kb = kBoltzmann;
  const double temp = 300.0;
  std::size_t ledger_errors = 0;
  std::size_t zeros = 0;
  const std::size_t runs = 100000;
  for (std::size_t seed = 0; seed < runs; ++seed) {
    const std::size_t m = 1 + seed % 8;
    const auto step = demon_step(m, seed, kb, temp);
    const double md = static_cast<double>(m);
    if (step.ledger.delta_total() != md) ++ledger_errors;
    if (step.ledger.work() != md * kb * temp * std::numbers::ln2) ++ledger_errors;
    zeros += step.record.outcome_bit == 0 ? 1 : 0;
  }
  const double freq = static_cast<double>(zeros) / static_cast<double>(runs);
  const bool freq_ok = std::abs(freq - 0.5) <= 3.0 * sigma(0.5, runs);

  std::size_t formula_errors = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t m = 1; m <= 6; ++m) {
      for (int e = 1; e <= 8; ++e) {
        MultiphotonParams p;
        p.n = n;
        p.m = m;
        p.eps = std::ldexp(1.0, -e);
        const auto cmp = multiphoton_comparison(p);
        if (cmp.product.delta_total() != static_cast<double>(n * m)) ++formula_errors;
        const double ent = std::ldexp(1.0, static_cast<int>(n)) * e - static_cast<double>(n);
        if (cmp.entangled.delta_total() != ent) ++formula_errors;
      }
    }
  }
  MultiphotonParams ex;
  ex.n = 2;
  ex.eps = 1.0 / 16.0;
  const double example = multiphoton_comparison(ex).entangled.delta_total();
  return {ledger_errors == 0 && freq_ok && formula_errors == 0 && example == 14.0,
          "ledger errors " + std::to_string(ledger_errors) + ", P(0) " + fmt("%.5f", freq) +
              ", formula errors " + std::to_string(formula_errors) + ", n=2 eps=2^-4 -> " +
              fmt("%g", example)};
}

bool prefix_free_oracle(const std::vector<std::string>& words) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i != j && words[j].compare(0, words[i].size(), words[i]) == 0) return false;
    }
  }
  return true;
}

Verdict ac13_shannon() {
  Rng rng(1313);
  std::size_t failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t k = 1 + rng.below(64);
    std::vector<double> p(k);
    double total = 0.0;
    for (auto& v : p) {
      // Mix heavy-tailed and flat weights.
      v = t % 2 ? std::exp(8.0 * rng.normal()) : rng.uniform() + 1e-3;
      total += v;
    }
    for (auto& v : p) v /= total;
    std::sort(p.begin(), p.end(), std::greater<>());
    const auto code = qkolab::codes::shannon_code(p);
    std::vector<std::string> words;
    double kraft = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      words.push_back(code.codewords[i].to_string());
      kraft += std::ldexp(1.0, -static_cast<int>(words.back().size()));
      if (words.back().size() != static_cast<std::size_t>(std::ceil(-std::log2(p[i])))) {
        if (k > 1) ++failures;
      }
    }
    if (!prefix_free_oracle(words) || kraft > 1.0) ++failures;
  }
  const std::vector<double> p = {0.5, 0.25, 0.25};
  const auto code = qkolab::codes::shannon_code(p);
  const bool example = code.codewords.size() == 3 && code.codewords[0].to_string() == "0" &&
                       code.codewords[1].to_string() == "10" &&
                       code.codewords[2].to_string() == "11";
  return {failures == 0 && example, "fuzz failures " + std::to_string(failures) +
                                        ", (1/2,1/4,1/4) example " + (example ? "ok" : "wrong")};
}

Verdict ac14_determinism() {
  const std::vector<std::vector<std::string>> commands = {
      {"codes", "verify", "--code", "hadamard", "--n", "6"},
      {"codes", "verify", "--code", "concatenated", "--n", "14", "--mode", "sampled"},
      {"equality", "--protocol", "quantum", "--n", "4", "--trials", "3000", "--seed", "9"},
      {"equality", "--protocol", "classical", "--n", "5", "--trials", "3000", "--s", "3"},
      {"equality", "--protocol", "classical-sim", "--n", "3", "--trials", "300", "--sim-mode",
       "sampled", "--inputs", "mixed"},
      {"complexity", "report", "--subject", "bell", "--n", "4"},
      {"complexity", "report", "--subject", "fingerprint", "--n", "3", "--seed", "5"},
      {"complexity", "report", "--subject", "haar", "--q", "5", "--seed", "5"},
      {"complexity", "report", "--subject", "stepwise", "--n", "6"},
      {"complexity", "report", "--subject", "observation1", "--n", "6", "--corpus", "60"},
      {"fingerprint", "build", "--n", "3", "--x", "101"},
      {"demon", "run", "--m", "5", "--seed", "3", "--runs", "50"},
      {"demon", "multi", "--n", "3", "--m", "2", "--mode", "simulated", "--seed", "4"},
      {"demon", "background", "--setting", "multi-projection", "--n", "2", "--m", "3"},
      {"sweep", "--n-min", "1", "--n-max", "10"},
  };
  std::size_t mismatches = 0;
  std::string failed;
  for (const auto& cmd : commands) {
    std::string reference;
    for (const char* threads : {"1", "4", "16"}) {
      setenv("QKOLAB_THREADS", threads, 1);
      std::ostringstream out;
      std::ostringstream err;
      const int rc = qkolab::cli::run(cmd, out, err);
      const std::string got = std::to_string(rc) + "\n" + out.str();
      if (rc != 0) failed += " [" + cmd[0] + ": " + err.str() + "]";
      if (std::string(threads) == "1") {
        reference = got;
      } else if (got != reference) {
        ++mismatches;
        failed += " [" + cmd[0] + " differs at " + threads + " threads]";
      }
    }
  }
  unsetenv("QKOLAB_THREADS");
  return {mismatches == 0 && failed.empty(), std::to_string(commands.size()) +
                                                 " commands x 3 thread counts, mismatches " +
                                                 std::to_string(mismatches) + failed};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"swap-test law", ac1_swap_test},
      {"fingerprint overlap bound", ac2_overlap_bound},
      {"quantum equality error", ac3_quantum_error},
      {"classical equality protocol", ac4_classical},
      {"preparation circuit forward", ac5_forward},
      {"codeword extraction and exclusion", ac6_reverse},
      {"quantization bound", ac7_quantization},
      {"description-length gap", ac8_gap},
      {"compression correlation under encoding", ac9_observation1},
      {"bell-pair maximally mixed state", ac10_bell},
      {"uhlmann fidelity under purification", ac11_uhlmann},
      {"demon ledger", ac12_demon},
      {"shannon code", ac13_shannon},
      {"cli determinism across threads", ac14_determinism},
  };
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--only") only = std::atoi(argv[i + 1]);
  }
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only != 0 && id != only) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("AC%-2d %s  %s: %s\n", id, v.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
