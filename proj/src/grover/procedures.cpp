#include <algorithm>

#include "qsm/errors.hpp"
#include "qsm/grover.hpp"
#include "qsm/qcore/statevector.hpp"

namespace qsm {

namespace {

constexpr std::uint64_t kAttemptStride = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kRefineSeed = 0xD1B54A32D192ED03ULL;

std::uint64_t attempt_seed(std::uint64_t seed, std::size_t attempt) {
  return seed + kAttemptStride * attempt;
}

void check_search(const Text& text, const Pattern& pattern, std::optional<std::size_t> k) {
  validate(text);
  validate(pattern, text.sigma);
  if (pattern.size() > text.size()) throw DomainError("pattern longer than text");
  if (k && *k >= pattern.size()) throw DomainError("k must be smaller than the pattern length");
}

bool run_oracle(const Text& block, const Pattern& pattern, std::optional<std::size_t> k,
                const BuildOptions& build) {
  return k ? run_qsadd(block, pattern, *k, build).r : run_qsand(block, pattern, build).r;
}

std::size_t oracle_qubits(std::size_t len, std::size_t m, std::size_t sigma, std::optional<std::size_t> k) {
  return k ? qsadd_qubits(len, m, sigma) : qsand_qubits(len, m, sigma);
}

void check_oracle_budget(std::size_t len, std::size_t m, std::size_t sigma, std::optional<std::size_t> k,
                         const BuildOptions& build) {
  const std::size_t need = oracle_qubits(len, m, sigma, k);
  if (need > build.budget_qubits) {
    throw ResourceError("oracle circuit needs " + std::to_string(need) + " qubits, budget is " +
                            std::to_string(build.budget_qubits),
                        need, build.budget_qubits);
  }
}

std::vector<std::size_t> occurrence_starts(const Text& text, const Pattern& pattern,
                                           std::optional<std::size_t> k) {
  const auto occ = k ? shift_add_search(text, pattern, *k) : shift_and_search(text, pattern);
  std::vector<std::size_t> starts;
  starts.reserve(occ.size());
  for (const auto& o : occ) starts.push_back(o.start);
  return starts;
}

std::size_t oracle_depth(const Text& block, const Pattern& pattern, const ProcedureOptions& options) {
  if (options.k) return circuit_depth(build_qsadd(block, pattern, *options.k, options.build).circuit, options.model);
  return qsand_depth(block.size(), pattern.size(), block.sigma, options.model);
}

// Runs Grover on `marked` planned for r solutions and measures until a sample
// passes `verify` or the attempts run out.
template <typename Verify>
MatchReport amplify_and_measure(const std::vector<bool>& marked, std::uint64_t r, const ProcedureOptions& options,
                                std::uint64_t seed, Verify verify) {
  MatchReport report;
  report.N = marked.size();
  report.r = r;
  report.iterations = grover_iterations(report.N, std::max<std::uint64_t>(r, 1));
  const GroverResult first = simulate_grover(marked, report.iterations, seed);
  report.success_probability = first.marked_mass;
  report.distribution = first.distribution;
  const std::size_t attempts = std::max<std::size_t>(options.max_attempts, 1);
  for (std::size_t a = 0; a < attempts; ++a) {
    const std::uint64_t idx = a == 0 ? first.sampled : sample_index(first.distribution, attempt_seed(seed, a));
    if (a == 0) report.sampled = idx;
    report.attempts = a + 1;
    if (verify(idx)) {
      report.found = true;
      report.verified = true;
      report.position = idx;
      break;
    }
  }
  return report;
}

}  // namespace

bool window_matches(const Text& text, const Pattern& pattern, std::size_t start, std::optional<std::size_t> k) {
  const std::size_t m = pattern.size();
  if (start + m > text.size()) return false;
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < m; ++i) mismatches += text.symbols[start + i] != pattern.symbols[i] ? 1 : 0;
  return mismatches <= k.value_or(0);
}

std::vector<bool> shift_oracle(const Text& text, const Pattern& pattern, std::optional<std::size_t> k,
                               const BuildOptions& build) {
  check_search(text, pattern, k);
  const std::size_t m = pattern.size();
  check_oracle_budget(m, m, text.sigma, k, build);
  const std::size_t shifts = text.size() - m + 1;
  std::vector<char> values(shifts, 0);
  const auto count = static_cast<std::int64_t>(shifts);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t j = 0; j < count; ++j) {
    Text block;
    block.sigma = text.sigma;
    block.symbols.assign(text.symbols.begin() + j, text.symbols.begin() + j + static_cast<std::int64_t>(m));
    values[static_cast<std::size_t>(j)] = run_oracle(block, pattern, k, build) ? 1 : 0;
  }
  return {values.begin(), values.end()};
}

MatchReport procedure_a(const Text& text, const Pattern& pattern, const ProcedureOptions& options) {
  check_search(text, pattern, options.k);
  const std::size_t m = pattern.size();
  const std::vector<bool> oracle = shift_oracle(text, pattern, options.k, options.build);
  std::vector<bool> marked(next_pow2(oracle.size()), false);
  std::copy(oracle.begin(), oracle.end(), marked.begin());

  const std::uint64_t r = occurrence_starts(text, pattern, options.k).size();
  MatchReport report = amplify_and_measure(marked, r, options, options.seed, [&](std::uint64_t j) {
    return window_matches(text, pattern, j, options.k);
  });

  Text first_block;
  first_block.sigma = text.sigma;
  first_block.symbols.assign(text.symbols.begin(), text.symbols.begin() + static_cast<std::ptrdiff_t>(m));
  report.depth.oracle = oracle_depth(first_block, pattern, options);
  report.depth.diffusion = ceil_log2(report.N);
  report.depth.total = report.iterations * (report.depth.oracle + report.depth.diffusion);
  return report;
}

ProcedureBReport procedure_b(const Text& text, const Pattern& pattern, std::optional<std::size_t> K,
                             const ProcedureOptions& options) {
  check_search(text, pattern, options.k);
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  ProcedureBReport out;
  out.plan = plan_blocks(n, m, K.value_or(default_block_size(n, m)));
  const BlockPlan& plan = out.plan;
  check_oracle_budget(plan.K, m, text.sigma + 1, options.k, options.build);

  std::vector<char> values(plan.count(), 0);
  const auto count = static_cast<std::int64_t>(plan.count());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    const Text block = block_text(text, plan, static_cast<std::size_t>(i));
    values[static_cast<std::size_t>(i)] = run_oracle(block, pattern, options.k, options.build) ? 1 : 0;
  }
  std::vector<bool> marked(plan.N, false);
  std::copy(values.begin(), values.end(), marked.begin());

  // Each window lies in exactly one block, so marked blocks are those holding
  // at least one classical occurrence.
  std::vector<bool> holds(plan.count(), false);
  for (std::size_t j : occurrence_starts(text, pattern, options.k)) holds[j / plan.stride] = true;
  const std::uint64_t r = static_cast<std::uint64_t>(std::count(holds.begin(), holds.end(), true));

  out.blocks = amplify_and_measure(marked, r, options, options.seed, [&](std::uint64_t i) {
    return i < holds.size() && holds[i];
  });
  const Text first_block = block_text(text, plan, 0);
  out.blocks.depth.oracle = oracle_depth(first_block, pattern, options);
  out.blocks.depth.diffusion = ceil_log2(out.blocks.N);
  out.blocks.depth.total = out.blocks.iterations * (out.blocks.depth.oracle + out.blocks.depth.diffusion);

  MatchReport& result = out.result;
  result = out.blocks;
  result.found = false;
  result.verified = false;
  result.position = 0;
  if (out.blocks.found) {
    const std::size_t i = out.blocks.position;
    ProcedureOptions inner = options;
    inner.seed = options.seed ^ kRefineSeed;
    out.refine = procedure_a(block_text(text, plan, i), pattern, inner);
    const MatchReport& refine = *out.refine;
    result.iterations += refine.iterations;
    result.success_probability *= refine.success_probability;
    result.depth.total += refine.depth.total;
    if (refine.found) {
      result.position = plan.starts[i] + refine.position;
      result.verified = window_matches(text, pattern, result.position, options.k);
      result.found = result.verified;
    }
  }
  return out;
}

}  // namespace qsm
