#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "qsm/errors.hpp"
#include "qsm/qcore/basis_sim.hpp"
#include "qsm/qcore/circuit.hpp"
#include "qsm/qcore/depth.hpp"
#include "qsm/qcore/statevector.hpp"

using namespace qsm;

namespace {

std::uint64_t field(std::uint64_t index, const std::vector<Qubit>& qs) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < qs.size(); ++i) v |= ((index >> qs[i]) & 1U) << i;
  return v;
}

std::uint64_t with_field(std::uint64_t index, const std::vector<Qubit>& qs, std::uint64_t v) {
  for (std::size_t i = 0; i < qs.size(); ++i) {
    index = (index & ~(1ULL << qs[i])) | (((v >> i) & 1U) << qs[i]);
  }
  return index;
}

std::vector<Qubit> range(Qubit first, std::size_t count) {
  std::vector<Qubit> v(count);
  std::iota(v.begin(), v.end(), first);
  return v;
}

Circuit single_gate(std::size_t qubits, const GateOp& g) {
  RegisterLayout layout;
  layout.add("q", qubits);
  Circuit c(layout);
  c.add(g);
  return c;
}

// Checks that the basis simulator, the expanded circuit on the statevector
// (both kernels) and `oracle` agree on every input.
template <typename Oracle>
void expect_gate_semantics(std::size_t qubits, const GateOp& g, Oracle oracle) {
  const Circuit c = single_gate(qubits, g);
  for (std::uint64_t in = 0; in < (1ULL << qubits); ++in) {
    const std::uint64_t want = oracle(in);
    ASSERT_EQ(run_basis(c, BasisState::from_index(qubits, in)).to_index(), want) << to_string(g.kind) << " in=" << in;
    for (Execution mode : {Execution::parallel, Execution::serial_reference}) {
      const Statevector out = run_statevector(c, Statevector::basis(qubits, in), mode);
      ASSERT_EQ(out[want], Amplitude(1.0, 0.0)) << to_string(g.kind) << " in=" << in;
      ASSERT_DOUBLE_EQ(out.norm_squared(), 1.0);
    }
  }
}

}  // namespace

TEST(Layout, RegistersAreContiguous) {
  RegisterLayout layout;
  const Register a = layout.add("a", 3);
  const Register b = layout.add("b", 2);
  EXPECT_EQ(a.offset, 0U);
  EXPECT_EQ(b.offset, 3U);
  EXPECT_EQ(layout.total_qubits(), 5U);
  EXPECT_EQ(layout["b"][1], 4U);
  EXPECT_TRUE(layout.contains("a"));
  EXPECT_FALSE(layout.contains("z"));
  EXPECT_EQ(a.slice(1, 2), (std::vector<Qubit>{1, 2}));
  EXPECT_THROW(layout.add("a", 1), DomainError);
}

TEST(Circuit, RejectsBadOperands) {
  RegisterLayout layout;
  layout.add("q", 3);
  Circuit c(layout);
  EXPECT_THROW(c.add(x_gate(3)), DomainError);
  EXPECT_THROW(c.add(cx_gate(1, 1)), DomainError);
  EXPECT_THROW(build_mcx({0, 1}, 1), DomainError);
  EXPECT_NO_THROW(c.add(ccx_gate(0, 1, 2)));
}

TEST(Semantics, ElementaryGates) {
  expect_gate_semantics(3, x_gate(1), [](std::uint64_t i) { return i ^ 2U; });
  expect_gate_semantics(3, cx_gate(0, 2), [](std::uint64_t i) { return (i & 1U) ? i ^ 4U : i; });
  expect_gate_semantics(3, ccx_gate(0, 2, 1), [](std::uint64_t i) { return (i & 5U) == 5U ? i ^ 2U : i; });
  expect_gate_semantics(3, swap_gate(0, 2), [](std::uint64_t i) {
    return (i & 2U) | ((i & 1U) << 2) | ((i >> 2) & 1U);
  });
  expect_gate_semantics(5, build_mcx({0, 1, 3, 4}, 2), [](std::uint64_t i) {
    return (i & 0b11011U) == 0b11011U ? i ^ 4U : i;
  });
  expect_gate_semantics(2, build_mcx({}, 1), [](std::uint64_t i) { return i ^ 2U; });
}

TEST(Semantics, RotateMovesPositionPToPPlusOffset) {
  const auto reg = range(1, 5);
  for (std::size_t offset = 0; offset < 12; ++offset) {
    expect_gate_semantics(7, build_rotate(reg, offset), [&](std::uint64_t i) {
      const std::uint64_t v = field(i, reg);
      std::uint64_t moved = 0;
      for (std::size_t p = 0; p < 5; ++p) moved |= ((v >> p) & 1U) << ((p + offset) % 5);
      return with_field(i, reg, moved);
    });
  }
}

TEST(Semantics, QramFetchXorsTableCell) {
  const std::vector<Qubit> addr{4, 0};
  const std::vector<Qubit> data{1, 5, 2};
  auto table = std::make_shared<const std::vector<std::uint64_t>>(std::vector<std::uint64_t>{5, 0, 7});
  expect_gate_semantics(6, qram_fetch_op(addr, data, table), [&](std::uint64_t i) {
    const std::uint64_t a = field(i, addr);
    return a < table->size() ? with_field(i, data, field(i, data) ^ (*table)[a]) : i;
  });
  EXPECT_THROW(qram_fetch_op(addr, data, std::make_shared<const std::vector<std::uint64_t>>(5, 1)), DomainError);
  EXPECT_THROW(qram_fetch_op(addr, data, std::make_shared<const std::vector<std::uint64_t>>(1, 9)), DomainError);
}

TEST(Semantics, IncrementIsModular) {
  for (std::size_t w = 1; w <= 5; ++w) {
    const auto reg = range(0, w);
    expect_gate_semantics(w, increment_op(reg), [&](std::uint64_t i) { return (i + 1) % (1ULL << w); });
  }
  const auto reg = range(2, 3);
  expect_gate_semantics(5, increment_op(reg, {0, 1}), [&](std::uint64_t i) {
    return (i & 3U) == 3U ? with_field(i, reg, (field(i, reg) + 1) % 8) : i;
  });
}

TEST(Semantics, CompareAgainstConstant) {
  const auto value = range(0, 3);
  for (std::uint64_t k = 0; k < 8; ++k) {
    expect_gate_semantics(4, compare_leq_op(value, k, 3), [&](std::uint64_t i) {
      return field(i, value) <= k ? i ^ 8U : i;
    });
  }
  EXPECT_THROW(compare_leq_op(value, 8, 3), DomainError);
}

TEST(Semantics, CompareAgainstRegister) {
  for (std::size_t w = 1; w <= 3; ++w) {
    const auto value = range(0, w);
    const auto bound = range(static_cast<Qubit>(w), w);
    const Qubit flag = static_cast<Qubit>(2 * w);
    expect_gate_semantics(2 * w + 1, compare_leq_op(value, bound, flag), [&](std::uint64_t i) {
      return field(i, value) <= field(i, bound) ? i ^ (1ULL << flag) : i;
    });
  }
}

TEST(Semantics, GeneralizedOr) {
  const std::vector<Qubit> src{0, 2, 3};
  expect_gate_semantics(5, gen_or_op(src, 4), [&](std::uint64_t i) { return field(i, src) != 0 ? i ^ 16U : i; });
}

TEST(Semantics, InverseUndoesEveryGate) {
  std::mt19937_64 rng(1);
  const auto reg = range(0, 4);
  auto table = std::make_shared<const std::vector<std::uint64_t>>(std::vector<std::uint64_t>{1, 2, 3, 0});
  const std::vector<GateOp> gates{
      build_rotate(reg, 3), increment_op(reg, {5}), qram_fetch_op(range(0, 2), range(2, 2), table),
      compare_leq_op(range(0, 2), range(2, 2), 4), gen_or_op(reg, 5), ccx_gate(0, 1, 2), swap_gate(1, 5)};
  for (const GateOp& g : gates) {
    RegisterLayout layout;
    layout.add("q", 6);
    Circuit c(layout);
    c.add(g);
    c.add(inverse(g));
    for (std::uint64_t in = 0; in < 64; ++in) {
      EXPECT_EQ(run_basis(c, BasisState::from_index(6, in)).to_index(), in) << to_string(g.kind);
    }
  }
}

TEST(BasisSimulator, RejectsNonClassicalGates) {
  RegisterLayout layout;
  layout.add("q", 2);
  Circuit c(layout);
  c.add(x_gate(0));
  c.add(h_gate(1));
  try {
    run_basis(c, BasisState(2));
    FAIL() << "expected NonClassicalGateError";
  } catch (const NonClassicalGateError& e) {
    EXPECT_NE(std::string(e.what()).find("index 1"), std::string::npos);
  }
}

TEST(Statevector, HadamardGivesEvenSplit) {
  RegisterLayout layout;
  const Register q = layout.add("q", 1);
  Circuit c(layout);
  const Statevector zero = run_statevector(c, Statevector(1));
  EXPECT_DOUBLE_EQ(measure_register(zero, q, 1).distribution[0], 1.0);
  c.add(h_gate(0));
  const Statevector plus = run_statevector(c, Statevector(1));
  const auto m = measure_register(plus, q, 1);
  EXPECT_NEAR(m.distribution[0], 0.5, 1e-15);
  EXPECT_NEAR(m.distribution[1], 0.5, 1e-15);
}

TEST(Statevector, CapIsEnforced) {
  EXPECT_THROW(Statevector(23), ResourceError);
  EXPECT_NO_THROW(Statevector(4, 4));
  EXPECT_THROW(Statevector(5, 4), ResourceError);
}

TEST(Statevector, ParallelKernelsMatchReference) {
  std::mt19937_64 rng(21);
  constexpr std::size_t kQubits = 10;
  Statevector a(kQubits);
  for (auto& amp : a.amplitudes()) amp = {std::normal_distribution<double>()(rng), std::normal_distribution<double>()(rng)};
  Statevector b = a;
  const auto pred = [](std::uint64_t v) { return v % 3 == 1; };
  const std::vector<GateOp> gates{h_gate(3),          x_gate(0),         z_gate(5),
                                  z_gate(2, {0, 7}),  cx_gate(9, 1),     ccx_gate(2, 4, 6),
                                  build_mcx({0, 1, 2, 3}, 8), swap_gate(4, 9),
                                  phase_flip_if(range(2, 5), pred)};
  for (const GateOp& g : gates) {
    apply_gate(a, g);
    reference::apply_gate(b, g);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      ASSERT_NEAR(std::abs(a[i] - b[i]), 0.0, 1e-12) << to_string(g.kind);
    }
  }
  EXPECT_THROW(apply_gate(a, increment_op(range(0, 3))), DomainError);
}

TEST(Sampling, DeterministicAndFollowsDistribution) {
  const std::vector<double> dist{0.0, 0.25, 0.0, 0.75};
  EXPECT_EQ(sample_index(dist, 99), sample_index(dist, 99));
  std::size_t hits[4] = {0, 0, 0, 0};
  for (std::uint64_t s = 0; s < 4000; ++s) ++hits[sample_index(dist, s)];
  EXPECT_EQ(hits[0], 0U);
  EXPECT_EQ(hits[2], 0U);
  EXPECT_NEAR(static_cast<double>(hits[3]) / 4000.0, 0.75, 0.05);
}

TEST(Depth, WeightFormulas) {
  const DepthModel model;
  EXPECT_EQ(ceil_log2(1), 0U);
  EXPECT_EQ(ceil_log2(2), 1U);
  EXPECT_EQ(ceil_log2(5), 3U);
  EXPECT_EQ(ceil_log2(8), 3U);
  EXPECT_EQ(model.weight(x_gate(0)), 1U);
  EXPECT_EQ(model.weight(build_mcx({0, 1, 2, 3, 4}, 5)), 3U);
  EXPECT_EQ(model.weight(build_mcx({0}, 5)), 1U);
  EXPECT_EQ(model.weight(build_rotate(range(0, 16), 1)), 2U);
  EXPECT_EQ(model.weight(increment_op(range(0, 5))), 15U);
  EXPECT_EQ(model.weight(increment_op(range(0, 1))), 1U);
  EXPECT_EQ(model.weight(compare_leq_op(range(0, 4), 3, 4)), 4U);
  EXPECT_EQ(model.weight(gen_or_op(range(0, 9), 9)), 6U);
  auto table = std::make_shared<const std::vector<std::uint64_t>>(5, 0);
  EXPECT_EQ(model.weight(qram_fetch_op(range(0, 3), range(3, 1), table)), 3U);

  DepthModel log_model;
  log_model.rotate = RotateCost::logarithmic;
  EXPECT_EQ(log_model.weight(build_rotate(range(0, 16), 1)), 4U);
  EXPECT_EQ(log_model.weight(build_rotate(range(0, 1), 0)), 1U);
}

TEST(Depth, AsapLayeringAndPhaseBreakdown) {
  RegisterLayout layout;
  layout.add("q", 4);
  Circuit c(layout);
  c.add(x_gate(0).in_phase(Phase::init));
  c.add(x_gate(1).in_phase(Phase::init));
  c.add(cx_gate(0, 1).in_phase(Phase::transition));
  c.add(x_gate(3).in_phase(Phase::fetch));
  c.add(increment_op(range(0, 4)).in_phase(Phase::advance));
  const DepthSchedule s = schedule_depth(c, DepthModel{});
  EXPECT_EQ(s.total, 1U + 1U + 8U);
  EXPECT_EQ(s.phase(Phase::init), 1U);
  EXPECT_EQ(s.phase(Phase::transition), 1U);
  EXPECT_EQ(s.phase(Phase::fetch), 0U);
  EXPECT_EQ(s.phase(Phase::advance), 8U);
  std::size_t sum = 0;
  for (std::size_t v : s.by_phase) sum += v;
  EXPECT_EQ(sum, s.total);
}
