#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "qsm/errors.hpp"
#include "qsm/grover.hpp"

namespace qsm {

std::uint64_t next_pow2(std::uint64_t x) { return x <= 1 ? 1 : std::bit_ceil(x); }

bool BlockPlan::covers(std::size_t block, std::size_t j) const {
  const std::size_t s = starts.at(block);
  return j >= s && j + m <= s + K;
}

BlockPlan plan_blocks(std::size_t n, std::size_t m, std::size_t K) {
  if (m == 0) throw DomainError("pattern length must be positive");
  if (K < m) throw DomainError("block size K must be at least the pattern length");
  if (K > n) throw DomainError("block size K must not exceed the text length");
  BlockPlan plan;
  plan.n = n;
  plan.m = m;
  plan.K = K;
  plan.stride = K - m + 1;
  const std::size_t shifts = n - m + 1;
  const std::size_t count = (shifts + plan.stride - 1) / plan.stride;
  plan.starts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) plan.starts.push_back(i * plan.stride);
  plan.N = next_pow2(count);
  return plan;
}

Text block_text(const Text& text, const BlockPlan& plan, std::size_t block) {
  const std::size_t s = plan.starts.at(block);
  Text out;
  out.sigma = text.sigma + 1;
  out.symbols.assign(plan.K, static_cast<Symbol>(text.sigma));
  for (std::size_t i = 0; i < plan.K && s + i < text.size(); ++i) out.symbols[i] = text.symbols[s + i];
  return out;
}

std::uint64_t grover_iterations(std::uint64_t N, std::uint64_t r) {
  if (r == 0 || r > N) throw DomainError("grover_iterations needs 1 <= r <= N");
  return static_cast<std::uint64_t>(
      std::floor(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(N) / static_cast<double>(r))));
}

GroverPlan plan_grover(std::uint64_t N, std::uint64_t r) {
  GroverPlan plan;
  plan.N = N;
  plan.r = r;
  plan.t = grover_iterations(N, r);
  plan.theta = std::asin(std::sqrt(static_cast<double>(r) / static_cast<double>(N)));
  return plan;
}

double success_probability(std::uint64_t N, std::uint64_t r, std::uint64_t t) {
  if (N == 0 || r > N) throw DomainError("success_probability needs r <= N, N >= 1");
  const double theta = std::asin(std::sqrt(static_cast<double>(r) / static_cast<double>(N)));
  const double s = std::sin(static_cast<double>(2 * t + 1) * theta);
  return s * s;
}

std::size_t default_block_size(std::size_t n, std::size_t m) {
  return std::max<std::size_t>(m, ceil_log2(n));
}

}  // namespace qsm
