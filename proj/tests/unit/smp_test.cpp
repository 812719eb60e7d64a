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

#include "qkolab/smp.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "qkolab/errors.hpp"
#include "qkolab/quantized.hpp"

namespace qkolab::smp {
namespace {

using codes::hadamard_code;

TEST(ClassicalProtocolTest, TranscriptSizeAndEqualInputs) {
  const auto code = hadamard_code(4);
  const auto x = BitString::from_string("1010");
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto t = run_classical_equality(x, x, code, ClassicalVariant::single_index(), seed);
    EXPECT_EQ(t.classical_bits, 2u * (4u + 1u));
    EXPECT_NE(t.decision, Decision::kNotEqual);
    EXPECT_EQ(t.decision == Decision::kRestart, t.collisions == 0);
  }
}

TEST(ClassicalProtocolTest, MultiIndexSendsSPairs) {
  const auto code = hadamard_code(6);
  const auto t = run_classical_equality(BitString(6), BitString::from_string("000001"), code,
                                        ClassicalVariant::multi_index(5), 7);
  EXPECT_EQ(t.messages[0].payload.size(), 5u * 7u);
  EXPECT_EQ(t.classical_bits, 2u * 5u * 7u);
}

TEST(ClassicalProtocolTest, MultiIndexCountFormula) {
  EXPECT_EQ(multi_index_count(64, 0.5),
            static_cast<std::size_t>(std::ceil(std::sqrt(64 * std::log(4.0)))));
  EXPECT_THROW(multi_index_count(64, 1.0), InputError);
}

TEST(QuantumProtocolTest, EqualInputsAlwaysAccepted) {
  const auto code = hadamard_code(3);
  const auto x = BitString::from_string("011");
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto t = run_quantum_equality(x, x, code, 3, seed);
    EXPECT_EQ(t.decision, Decision::kEqual);
    EXPECT_EQ(t.qubits, 2u * 3u * 4u);
    EXPECT_EQ(t.outcomes.size(), 3u);
  }
}

TEST(QuantumProtocolTest, RejectsOversizedSwapTests) {
  const auto code = hadamard_code(10);
  EXPECT_THROW(run_quantum_equality(BitString(10), BitString(10), code, 1, 0), CapError);
}

TEST(SimulationProtocolTest, ThresholdDecisionIsExact) {
  const auto code = hadamard_code(3);
  for (std::uint64_t x = 0; x < 8; ++x) {
    for (std::uint64_t y = 0; y < 8; ++y) {
      const auto t = run_classical_simulation_of_quantum(
          BitString::from_uint(x, 3), BitString::from_uint(y, 3), code, 1.0 / 256.0,
          SimulationMode::kThreshold, 1, 0);
      EXPECT_EQ(t.decision, x == y ? Decision::kEqual : Decision::kNotEqual);
      EXPECT_EQ(t.classical_bits, 2u * fingerprint::quantized_length_bits(4, 9));
    }
  }
}

TEST(SimulationProtocolTest, SampledModeUsesTheQuantumDraws) {
  const auto code = hadamard_code(3);
  const auto x = BitString::from_string("001");
  const auto y = BitString::from_string("100");
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto q = run_quantum_equality(x, y, code, 2, seed);
    const auto c =
        run_classical_simulation_with_bits(x, y, code, 30, SimulationMode::kSampled, 2, seed);
    EXPECT_EQ(q.outcomes, c.outcomes);
  }
}

TEST(WilsonIntervalTest, KnownValues) {
  const auto i = wilson_interval(50, 100, 1.959963984540054);
  EXPECT_NEAR(i.lo, 0.4038315, 1e-7);
  EXPECT_NEAR(i.hi, 0.5961685, 1e-7);
  const auto zero = wilson_interval(0, 10);
  EXPECT_EQ(zero.lo, 0.0);
  EXPECT_GT(zero.hi, 0.0);
}

TEST(MonteCarloTest, QuantumErrorNearAnalytic) {
  ExperimentConfig cfg;
  cfg.n = 3;
  cfg.trials = 4000;
  cfg.master_seed = 71;
  const auto r = monte_carlo(cfg);
  EXPECT_DOUBLE_EQ(r.analytic_error_rate, 0.625);
  EXPECT_LE(r.wilson_99.lo, 0.625);
  EXPECT_GE(r.wilson_99.hi, 0.625);
  EXPECT_EQ(r.false_not_equal, 0u);
  EXPECT_EQ(r.mean_qubits, 8.0);
}

TEST(MonteCarloTest, MixedInputsCountBothDirections) {
  ExperimentConfig cfg;
  cfg.n = 4;
  cfg.trials = 2000;
  cfg.protocol = Protocol::kClassical;
  cfg.inputs = InputMode::kMixed;
  const auto r = monte_carlo(cfg);
  EXPECT_EQ(r.equal_input_trials + r.unequal_input_trials, 2000u);
  EXPECT_GT(r.equal_input_trials, 850u);
  EXPECT_GT(r.unequal_input_trials, 850u);
  EXPECT_EQ(r.false_not_equal, 0u);
  EXPECT_EQ(r.restarts + r.decided, 2000u);
}

TEST(MonteCarloTest, IndependentOfThreadCount) {
  ExperimentConfig cfg;
  cfg.n = 4;
  cfg.trials = 3000;
  cfg.protocol = Protocol::kClassical;
  cfg.s = 3;
  setenv("QKOLAB_THREADS", "1", 1);
  const auto one = monte_carlo(cfg).to_json();
  setenv("QKOLAB_THREADS", "7", 1);
  const auto seven = monte_carlo(cfg).to_json();
  unsetenv("QKOLAB_THREADS");
  EXPECT_EQ(one, seven);
}

TEST(MonteCarloTest, SingleTrialKeepsTranscript) {
  ExperimentConfig cfg;
  cfg.trials = 1;
  const auto r = monte_carlo(cfg);
  ASSERT_EQ(r.transcripts.size(), 1u);
  EXPECT_TRUE(r.to_json().contains("transcripts"));
}

TEST(CommunicationReportTest, RowsFollowFormulas) {
  const auto rows = communication_report(1, 4, 16, 2);
  ASSERT_EQ(rows.size(), 12u);
  for (const auto& row : rows) {
    const int q = static_cast<int>(row.n) + 1;
    EXPECT_EQ(row.q, q);
    if (row.protocol == "quantum") {
      EXPECT_EQ(row.qubits, 4u * static_cast<std::size_t>(q));
    } else if (row.protocol == "classical-sim") {
      EXPECT_EQ(row.classical_bits, 2u * ((std::size_t{1} << (q + 1)) * 16u + 64u));
    } else {
      EXPECT_EQ(row.classical_bits, 2u * (row.n + 1));
    }
  }
  EXPECT_THROW(communication_report(3, 2, 16), InputError);
  EXPECT_THROW(communication_report(1, 25, 16), CapError);
}

TEST(ParsingTest, NamesRoundTrip) {
  for (auto p : {Protocol::kClassical, Protocol::kQuantum, Protocol::kClassicalSim}) {
    EXPECT_EQ(protocol_from_string(to_string(p)), p);
  }
  for (auto m : {InputMode::kUnequal, InputMode::kEqual, InputMode::kMixed}) {
    EXPECT_EQ(input_mode_from_string(to_string(m)), m);
  }
  EXPECT_THROW(protocol_from_string("telepathy"), InputError);
}

}  // namespace
}  // namespace qkolab::smp
