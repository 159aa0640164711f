#pragma once

// Exact Grover search over block indices with the QSAnd / QSAdd runners as
// classically evaluated phase oracles.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qsm/bitparallel.hpp"
#include "qsm/circuits.hpp"
#include "qsm/qcore/depth.hpp"

namespace qsm {

/// Smallest power of two >= x (1 for x <= 1).
std::uint64_t next_pow2(std::uint64_t x);

struct BlockPlan {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t K = 0;
  std::size_t stride = 0;  // K - m + 1
  std::vector<std::size_t> starts;
  std::size_t N = 0;  // starts.size() rounded up to a power of two

  std::size_t count() const noexcept { return starts.size(); }
  /// True when [j, j + m) lies inside block i.
  bool covers(std::size_t block, std::size_t j) const;
};

/// Throws DomainError unless 1 <= m <= K <= n.
BlockPlan plan_blocks(std::size_t n, std::size_t m, std::size_t K);

/// Block i as a K-symbol text over sigma + 1 symbols; positions past the end
/// of the text hold the sentinel sigma.
Text block_text(const Text& text, const BlockPlan& plan, std::size_t block);

struct GroverPlan {
  std::uint64_t N = 0;
  std::uint64_t r = 0;
  std::uint64_t t = 0;
  double theta = 0.0;
};

/// floor(pi/4 * sqrt(N / r)). Throws DomainError unless 1 <= r <= N.
std::uint64_t grover_iterations(std::uint64_t N, std::uint64_t r);
GroverPlan plan_grover(std::uint64_t N, std::uint64_t r);

/// sin^2((2t + 1) * asin(sqrt(r / N))).
double success_probability(std::uint64_t N, std::uint64_t r, std::uint64_t t);

struct GroverResult {
  std::vector<double> distribution;  // size N
  double marked_mass = 0.0;
  std::uint64_t marked = 0;
  std::uint64_t sampled = 0;
};

/// Exact evolution of the uniform start state under t oracle + diffusion
/// rounds. N must be a power of two.
GroverResult simulate_grover(const std::function<bool(std::uint64_t)>& predicate, std::uint64_t N,
                             std::uint64_t t, std::uint64_t seed);
GroverResult simulate_grover(const std::vector<bool>& marked, std::uint64_t t, std::uint64_t seed);

struct DepthTotals {
  std::size_t oracle = 0;     // per iteration
  std::size_t diffusion = 0;  // per iteration
  std::size_t total = 0;
};

struct MatchReport {
  bool found = false;
  std::size_t position = 0;
  bool verified = false;
  std::uint64_t iterations = 0;
  double success_probability = 0.0;
  DepthTotals depth;
  std::uint64_t N = 0;
  std::uint64_t r = 0;
  std::uint64_t sampled = 0;
  std::size_t attempts = 0;
  std::vector<double> distribution;
};

struct ProcedureBReport {
  MatchReport result;  // final position, verification, summed depth
  BlockPlan plan;
  MatchReport blocks;  // stage 1: search over block indices
  std::optional<MatchReport> refine;  // stage 2: Procedure A inside the block
};

struct ProcedureOptions {
  std::uint64_t seed = 0;
  /// Mismatch bound; when set the oracles run QSAdd instead of QSAnd.
  std::optional<std::size_t> k;
  /// Measurements drawn from the final distribution until one verifies.
  std::size_t max_attempts = 8;
  DepthModel model;
  BuildOptions build;
};

/// Occurrence check used for verification: exact or within k mismatches.
bool window_matches(const Text& text, const Pattern& pattern, std::size_t start,
                    std::optional<std::size_t> k);

/// Oracle value of every shift j in 0..n-m, computed by running the circuit on
/// the m-symbol block at j.
std::vector<bool> shift_oracle(const Text& text, const Pattern& pattern, std::optional<std::size_t> k,
                               const BuildOptions& build = {});

MatchReport procedure_a(const Text& text, const Pattern& pattern, const ProcedureOptions& options = {});
ProcedureBReport procedure_b(const Text& text, const Pattern& pattern, std::optional<std::size_t> K,
                             const ProcedureOptions& options = {});

/// max(m, ceil(log2 n)).
std::size_t default_block_size(std::size_t n, std::size_t m);

struct DepthScanRow {
  std::size_t n = 0;
  std::size_t K = 0;
  std::size_t qsand_full = 0;
  std::size_t proc_a = 0;
  std::size_t proc_b = 0;
};

/// Analytic depth of the full-text QSAnd circuit and of Procedures A and B
/// (one planted occurrence), from the depth model alone.
DepthScanRow depth_totals(std::size_t n, std::size_t m, std::size_t K, std::size_t sigma,
                          const DepthModel& model);

}  // namespace qsm
