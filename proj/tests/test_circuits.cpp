#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "qsm/circuits.hpp"
#include "qsm/errors.hpp"
#include "qsm/qcore/gate_list.hpp"
#include "qsm/qcore/statevector.hpp"

using namespace qsm;

namespace {

std::vector<std::size_t> starts(const std::vector<Occurrence>& occ) {
  std::vector<std::size_t> out;
  for (const auto& o : occ) out.push_back(o.start);
  return out;
}

Text random_text(std::mt19937_64& rng, std::size_t n, std::size_t sigma) {
  Text t{std::vector<Symbol>(n), sigma};
  for (auto& s : t.symbols) s = static_cast<Symbol>(rng() % sigma);
  return t;
}

}  // namespace

TEST(Qsand, AbabFindsBothOccurrences) {
  const QsandTrace trace = run_qsand(text_from_letters("abab", 2), pattern_from_letters("ab"));
  EXPECT_TRUE(trace.r);
  EXPECT_EQ(occurrence_positions_from_trace(trace), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(trace.blocks, (std::vector<std::uint64_t>{0b01, 0b10, 0b01, 0b10}));
  EXPECT_TRUE(trace.uncompute_violations.empty());
  EXPECT_TRUE(trace.ledger_violations.empty());
}

TEST(Qsand, OccurrenceEndingAtLastSymbol) {
  const QsandTrace trace = run_qsand(text_from_letters("aab", 2), pattern_from_letters("ab"));
  EXPECT_TRUE(trace.r);
  EXPECT_EQ(occurrence_positions_from_trace(trace), (std::vector<std::size_t>{1}));
}

TEST(Qsand, AbsentPatternLeavesOutputClear) {
  const QsandTrace trace = run_qsand(text_from_letters("bbbb", 2), pattern_from_letters("a"));
  EXPECT_FALSE(trace.r);
  EXPECT_TRUE(occurrence_positions_from_trace(trace).empty());
}

TEST(Qsand, WorkRegistersEndClean) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 1 + rng() % 5;
    const Text text = random_text(rng, 1 + rng() % 30, 3);
    Pattern p{std::vector<Symbol>(m)};
    for (auto& s : p.symbols) s = static_cast<Symbol>(rng() % 3);
    const QsandCircuit built = build_qsand(text, p);
    const QsandTrace trace = run_qsand(text, p);
    EXPECT_TRUE(trace.final_state.all_zero(built.regs.b));
    EXPECT_TRUE(trace.final_state.all_zero(built.regs.c));
    EXPECT_TRUE(trace.final_state.all_zero(built.regs.d));
    EXPECT_EQ(occurrence_positions_from_trace(trace), starts(brute_force_exact(text, p)));
  }
}

TEST(Qsand, QubitCountAndBudget) {
  const Text text = text_from_letters("abcabcab", 3);
  const Pattern p = pattern_from_letters("abc");
  // a: 24, b: 3, d: 3, c: 2, j: 3, r: 1
  EXPECT_EQ(qsand_qubits(8, 3, 3), 36U);
  EXPECT_EQ(build_qsand(text, p).circuit.num_qubits(), 36U);
  BuildOptions tight;
  tight.budget_qubits = 35;
  try {
    build_qsand(text, p, tight);
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.required_qubits(), 36U);
  }
}

TEST(Qsand, AnalyticDepthEqualsScheduledDepth) {
  std::mt19937_64 rng(8);
  std::vector<DepthModel> models(3);
  models[1].rotate = RotateCost::logarithmic;
  models[2].c_2q = 3;
  models[2].c_3q = 5;
  models[2].c_rot = 7;
  for (const DepthModel& model : models) {
    for (std::size_t n = 1; n <= 12; ++n) {
      for (std::size_t m = 1; m <= 5; ++m) {
        for (std::size_t sigma : {1, 2, 3, 5}) {
          const Text text = random_text(rng, n, sigma);
          Pattern p{std::vector<Symbol>(m, 0)};
          const std::size_t built = circuit_depth(build_qsand(text, p).circuit, model);
          ASSERT_EQ(qsand_depth(n, m, sigma, model), built) << "n=" << n << " m=" << m << " sigma=" << sigma;
        }
      }
    }
  }
}

TEST(Qsand, GateListMatchesGolden) {
  const QsandCircuit built = build_qsand(text_from_letters("aab", 2), pattern_from_letters("ab"));
  std::ifstream golden(QSM_GOLDEN_DIR "/qsand_aab_ab.gates");
  ASSERT_TRUE(golden.good());
  std::stringstream expected;
  expected << golden.rdbuf();
  EXPECT_EQ(to_gate_list(built.circuit), expected.str());
}

TEST(Qsand, StatevectorAgreesOnCircuitInput) {
  const Text text = text_from_letters("aba", 2);
  const Pattern p = pattern_from_letters("ab");
  const QsandCircuit built = build_qsand(text, p);
  ASSERT_LE(built.circuit.num_qubits(), 22U);
  const Statevector out = run_statevector(built.circuit, Statevector(built.circuit.num_qubits()));
  const auto measured = measure_register(out, built.regs.r, 1);
  EXPECT_EQ(measured.distribution[1], 1.0);
  EXPECT_EQ(measured.sampled, 1U);
}

TEST(Qsadd, FlagsMatchOracle) {
  const QsaddTrace t1 = run_qsadd(text_from_letters("abcd", 4), pattern_from_letters("abd"), 1);
  EXPECT_EQ(occurrence_positions_from_trace(t1), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(t1.r);
  const QsaddTrace t0 = run_qsadd(text_from_letters("abcd", 4), pattern_from_letters("abd"), 0);
  EXPECT_FALSE(t0.r);
  EXPECT_THROW(run_qsadd(text_from_letters("abcd", 4), pattern_from_letters("abd"), 3), DomainError);
}

TEST(Qsadd, CountersTrackClassicalShiftAdd) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + rng() % 6;
    const std::size_t sigma = 2 + rng() % 3;
    const Text text = random_text(rng, 1 + rng() % 24, sigma);
    Pattern p{std::vector<Symbol>(m)};
    for (auto& s : p.symbols) s = static_cast<Symbol>(rng() % sigma);
    const std::size_t k = rng() % m;
    const QsaddTrace trace = run_qsadd(text, p, k);
    EXPECT_EQ(trace.cells, shift_add_trace(text, p));
    EXPECT_EQ(occurrence_positions_from_trace(trace), starts(brute_force_kmismatch(text, p, k)));
    EXPECT_TRUE(trace.uncompute_violations.empty());
  }
}

TEST(Qsadd, BoundRegisterHoldsK) {
  const Text text = text_from_letters("abcab", 3);
  const Pattern p = pattern_from_letters("abc");
  for (std::size_t k = 0; k < 3; ++k) {
    const QsaddCircuit built = build_qsadd(text, p, k);
    const QsaddTrace trace = run_qsadd(text, p, k);
    EXPECT_EQ(trace.final_state.value(built.regs.a), k);
    EXPECT_EQ(built.regs.cells, text.size() + p.size() - 1);
  }
}

TEST(DepthReport, BreakdownSumsToTotal) {
  const QsandCircuit built = build_qsand(text_from_letters("abcab", 3), pattern_from_letters("ab"));
  const DepthReport report = depth_report(built.circuit, DepthModel{});
  std::size_t sum = 0;
  for (std::size_t v : report.schedule.by_phase) sum += v;
  EXPECT_EQ(sum, report.total_layers);
  EXPECT_EQ(report.gates, built.circuit.size());
  EXPECT_GT(report.schedule.phase(Phase::fetch), 0U);
  EXPECT_GT(report.schedule.phase(Phase::advance), 0U);
}
