#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qsm/errors.hpp"
#include "qsm/grover.hpp"
#include "qsm/qcore/statevector.hpp"

using namespace qsm;

namespace {

Text random_text(std::mt19937_64& rng, std::size_t n, std::size_t sigma) {
  Text t{std::vector<Symbol>(n), sigma};
  for (auto& s : t.symbols) s = static_cast<Symbol>(rng() % sigma);
  return t;
}

Pattern random_pattern(std::mt19937_64& rng, std::size_t m, std::size_t sigma) {
  Pattern p{std::vector<Symbol>(m)};
  for (auto& s : p.symbols) s = static_cast<Symbol>(rng() % sigma);
  return p;
}

// Independent Grover route: H layer, then t rounds of the predicate phase
// oracle and the H X (multi-controlled Z) X H diffusion, on the statevector.
double statevector_marked_mass(std::size_t qubits, const std::vector<bool>& marked, std::size_t t) {
  RegisterLayout layout;
  const Register x = layout.add("x", qubits);
  Circuit c(layout);
  const auto qs = x.qubits();
  for (Qubit q : qs) c.add(h_gate(q));
  for (std::size_t it = 0; it < t; ++it) {
    c.add(phase_flip_if(qs, [&marked](std::uint64_t v) { return marked[v]; }));
    for (Qubit q : qs) c.add(h_gate(q));
    for (Qubit q : qs) c.add(x_gate(q));
    c.add(z_gate(qs.back(), std::vector<Qubit>(qs.begin(), qs.end() - 1)));
    for (Qubit q : qs) c.add(x_gate(q));
    for (Qubit q : qs) c.add(h_gate(q));
  }
  const Statevector out = run_statevector(c, Statevector(qubits));
  const auto dist = measure_register(out, x, 0).distribution;
  double mass = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) mass += marked[i] ? dist[i] : 0.0;
  return mass;
}

}  // namespace

TEST(Plan, Examples) {
  const BlockPlan a = plan_blocks(16, 3, 8);
  EXPECT_EQ(a.stride, 6U);
  EXPECT_EQ(a.starts, (std::vector<std::size_t>{0, 6, 12}));
  EXPECT_EQ(a.N, 4U);
  const BlockPlan b = plan_blocks(8, 3, 3);
  EXPECT_EQ(b.stride, 1U);
  EXPECT_EQ(b.starts, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(b.N, 8U);
  EXPECT_THROW(plan_blocks(8, 3, 2), DomainError);
  EXPECT_THROW(plan_blocks(8, 3, 9), DomainError);
}

TEST(Plan, BlocksOverlapByMMinusOneAndCoverEveryWindow) {
  for (std::size_t n = 1; n <= 40; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      for (std::size_t K = m; K <= n; ++K) {
        const BlockPlan plan = plan_blocks(n, m, K);
        for (std::size_t i = 1; i < plan.count(); ++i) {
          ASSERT_EQ(plan.starts[i - 1] + K - plan.starts[i], m - 1);
        }
        ASSERT_GE(plan.N, plan.count());
        ASSERT_LT(plan.N, 2 * plan.count());
        for (std::size_t j = 0; j + m <= n; ++j) {
          bool covered = false;
          for (std::size_t i = 0; i < plan.count(); ++i) covered = covered || plan.covers(i, j);
          ASSERT_TRUE(covered) << n << ' ' << m << ' ' << K << ' ' << j;
        }
      }
    }
  }
}

TEST(Plan, BlockTextPadsWithSentinel) {
  const Text text = text_from_letters("abcab", 3);
  const BlockPlan plan = plan_blocks(5, 2, 4);
  ASSERT_EQ(plan.starts, (std::vector<std::size_t>{0, 3}));
  const Text last = block_text(text, plan, 1);
  EXPECT_EQ(last.sigma, 4U);
  EXPECT_EQ(last.symbols, (std::vector<Symbol>{0, 1, 3, 3}));
}

TEST(Iterations, Examples) {
  EXPECT_EQ(grover_iterations(4, 1), 1U);
  EXPECT_EQ(grover_iterations(16, 1), 3U);
  EXPECT_EQ(grover_iterations(32, 32), 0U);
  EXPECT_THROW(grover_iterations(4, 5), DomainError);
  EXPECT_THROW(grover_iterations(4, 0), DomainError);
  EXPECT_NEAR(plan_grover(4, 1).theta, std::numbers::pi / 6, 1e-15);
}

TEST(SuccessProbability, Examples) {
  EXPECT_NEAR(success_probability(4, 1, 1), 1.0, 1e-15);
  EXPECT_NEAR(success_probability(16, 1, 3), std::pow(std::sin(7 * std::asin(0.25)), 2), 1e-15);
  EXPECT_NEAR(success_probability(16, 1, 3), 0.9613, 1e-4);
  for (std::uint64_t r = 0; r <= 8; ++r) EXPECT_NEAR(success_probability(8, r, 0), r / 8.0, 1e-15);
}

TEST(SimulateGrover, Examples) {
  std::vector<bool> one(4, false);
  one[1] = true;
  EXPECT_EQ(simulate_grover(one, 1, 3).marked_mass, 1.0);
  std::vector<bool> two(8, false);
  two[0] = two[5] = true;
  EXPECT_NEAR(simulate_grover(two, 1, 3).marked_mass, 1.0, 1e-15);
  const GroverResult uniform = simulate_grover(two, 0, 3);
  for (double p : uniform.distribution) EXPECT_DOUBLE_EQ(p, 1.0 / 8);
  const GroverResult none = simulate_grover(std::vector<bool>(8, false), 5, 3);
  for (double p : none.distribution) EXPECT_NEAR(p, 1.0 / 8, 1e-15);
  EXPECT_THROW(simulate_grover(std::vector<bool>(6, false), 1, 0), DomainError);
}

TEST(SimulateGrover, SeedDeterminesSample) {
  std::vector<bool> marked(64, false);
  marked[10] = marked[40] = true;
  EXPECT_EQ(simulate_grover(marked, 4, 77).sampled, simulate_grover(marked, 4, 77).sampled);
}

TEST(SimulateGrover, AgreesWithStatevectorCircuit) {
  std::mt19937_64 rng(2);
  for (std::size_t qubits = 1; qubits <= 7; ++qubits) {
    const std::size_t N = std::size_t{1} << qubits;
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<bool> marked(N, false);
      const std::size_t r = rng() % (N + 1);
      for (std::size_t i = 0; i < r; ++i) marked[rng() % N] = true;
      const std::size_t t = rng() % 12;
      EXPECT_NEAR(simulate_grover(marked, t, 0).marked_mass, statevector_marked_mass(qubits, marked, t), 1e-10)
          << "N=" << N << " t=" << t;
    }
  }
}

TEST(ProcedureA, Examples) {
  ProcedureOptions opts;
  opts.seed = 5;
  const MatchReport abab = procedure_a(text_from_letters("abab", 2), pattern_from_letters("ab"), opts);
  EXPECT_TRUE(abab.found && abab.verified);
  EXPECT_TRUE(abab.position == 0 || abab.position == 2);
  EXPECT_EQ(abab.r, 2U);
  // N = 4 with two marked shifts: theta = pi/4 and one round gives sin^2(3pi/4).
  EXPECT_EQ(abab.iterations, 1U);
  EXPECT_NEAR(abab.distribution[0] + abab.distribution[2], 0.5, 1e-12);
  EXPECT_EQ(abab.distribution[0], abab.distribution[2]);

  const MatchReport absent = procedure_a(text_from_letters("bbbb", 2), pattern_from_letters("a"), opts);
  EXPECT_FALSE(absent.found);
  for (double p : absent.distribution) EXPECT_NEAR(p, 0.25, 1e-15);

  // Two shifts pad to N = 2, so one Grover round leaves the mass at 1/2.
  const MatchReport aab = procedure_a(text_from_letters("aab", 2), pattern_from_letters("ab"), opts);
  EXPECT_EQ(aab.N, 2U);
  EXPECT_EQ(aab.iterations, 1U);
  EXPECT_NEAR(aab.success_probability, success_probability(2, 1, 1), 1e-15);
  EXPECT_NEAR(aab.success_probability, 0.5, 1e-12);
  EXPECT_TRUE(aab.found);
  EXPECT_EQ(aab.position, 1U);
}

TEST(ProcedureA, DepthFollowsIterationCount) {
  const Text text = text_from_letters("abcabcabcabcabca", 3);
  const MatchReport r = procedure_a(text, pattern_from_letters("cab"), {});
  EXPECT_EQ(r.depth.oracle, qsand_depth(3, 3, 3, DepthModel{}));
  EXPECT_EQ(r.depth.diffusion, ceil_log2(r.N));
  EXPECT_EQ(r.depth.total, r.iterations * (r.depth.oracle + r.depth.diffusion));
}

TEST(ProcedureB, PlantedBinaryText) {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 10) {
    const Pattern p = random_pattern(rng, 5, 2);
    Text text = random_text(rng, 32, 2);
    const std::size_t j = rng() % 28;
    std::copy(p.symbols.begin(), p.symbols.end(), text.symbols.begin() + static_cast<std::ptrdiff_t>(j));
    if (count_occurrences(text, p) != 1) continue;
    ProcedureOptions opts;
    opts.seed = rng();
    const ProcedureBReport b = procedure_b(text, p, 8, opts);
    EXPECT_EQ(b.plan.K, 8U);
    EXPECT_TRUE(b.result.found && b.result.verified);
    EXPECT_EQ(b.result.position, j);
    ++checked;
  }
}

TEST(ProcedureB, AbsentPattern) {
  const ProcedureBReport b = procedure_b(text_from_letters("aaaaaaaaaaaaaaaa", 2), pattern_from_letters("ab"), 4);
  EXPECT_FALSE(b.result.found);
  EXPECT_FALSE(b.refine.has_value());
}

TEST(ProcedureB, FindsOccurrenceAtEveryPlacement) {
  std::mt19937_64 rng(41);
  for (std::size_t n = 8; n <= 24; n += 4) {
    for (std::size_t m : {2, 3}) {
      for (std::size_t K = m; K <= std::min<std::size_t>(n, 7); ++K) {
        for (std::size_t j = 0; j + m <= n; ++j) {
          Text text{std::vector<Symbol>(n, 0), 2};
          Pattern p{std::vector<Symbol>(m, 1)};
          std::fill(text.symbols.begin() + static_cast<std::ptrdiff_t>(j),
                    text.symbols.begin() + static_cast<std::ptrdiff_t>(j + m), 1);
          ProcedureOptions opts;
          opts.seed = rng();
          opts.max_attempts = 64;
          const ProcedureBReport b = procedure_b(text, p, K, opts);
          ASSERT_TRUE(b.result.found) << n << ' ' << m << ' ' << K << ' ' << j;
          ASSERT_EQ(b.result.position, j);
        }
      }
    }
  }
}

TEST(Procedures, KMismatchOracle) {
  ProcedureOptions opts;
  opts.k = 1;
  const Text text = text_from_letters("aaaaabbaaaa", 2);
  const MatchReport a = procedure_a(text, pattern_from_letters("bab"), opts);
  ASSERT_TRUE(a.found);
  EXPECT_TRUE(window_matches(text, pattern_from_letters("bab"), a.position, 1));
  EXPECT_EQ(a.r, brute_force_kmismatch(text, pattern_from_letters("bab"), 1).size());
  const ProcedureBReport b = procedure_b(text, pattern_from_letters("bab"), std::nullopt, opts);
  ASSERT_TRUE(b.result.found);
  EXPECT_TRUE(window_matches(text, pattern_from_letters("bab"), b.result.position, 1));
}

TEST(Procedures, RejectBadInput) {
  EXPECT_THROW(procedure_a(text_from_letters("ab", 2), pattern_from_letters("aba"), {}), DomainError);
  ProcedureOptions opts;
  opts.k = 2;
  EXPECT_THROW(procedure_a(text_from_letters("abab", 2), pattern_from_letters("ab"), opts), DomainError);
  opts.k.reset();
  opts.build.budget_qubits = 4;
  EXPECT_THROW(procedure_a(text_from_letters("abab", 2), pattern_from_letters("ab"), opts), ResourceError);
}

TEST(DepthTotals, MatchesProcedureReports) {
  std::mt19937_64 rng(17);
  const Pattern p = random_pattern(rng, 4, 2);
  Text text = random_text(rng, 100, 2);
  std::copy(p.symbols.begin(), p.symbols.end(), text.symbols.begin() + 37);
  const DepthModel model;
  const DepthScanRow row = depth_totals(100, 4, default_block_size(100, 4), 2, model);
  EXPECT_EQ(row.qsand_full, qsand_depth(100, 4, 2, model));
  ProcedureOptions opts;
  const MatchReport a = procedure_a(text, p, opts);
  if (a.r == 1) {
    EXPECT_EQ(row.proc_a, a.depth.total);
  }
  EXPECT_EQ(default_block_size(100, 4), 7U);
  EXPECT_EQ(default_block_size(100, 9), 9U);
}
