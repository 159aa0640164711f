#include "qsm/errors.hpp"
#include "qsm/grover.hpp"

namespace qsm {

DepthScanRow depth_totals(std::size_t n, std::size_t m, std::size_t K, std::size_t sigma,
                          const DepthModel& model) {
  const BlockPlan plan = plan_blocks(n, m, K);
  DepthScanRow row;
  row.n = n;
  row.K = K;
  row.qsand_full = qsand_depth(n, m, sigma, model);

  // One planted occurrence: r = 1 in every Grover stage.
  const std::uint64_t n_a = next_pow2(n - m + 1);
  row.proc_a = grover_iterations(n_a, 1) * (qsand_depth(m, m, sigma, model) + ceil_log2(n_a));

  const std::uint64_t n_blocks = plan.N;
  const std::uint64_t n_inner = next_pow2(plan.stride);
  row.proc_b = grover_iterations(n_blocks, 1) * (qsand_depth(K, m, sigma + 1, model) + ceil_log2(n_blocks)) +
               grover_iterations(n_inner, 1) * (qsand_depth(m, m, sigma + 1, model) + ceil_log2(n_inner));
  return row;
}

}  // namespace qsm
