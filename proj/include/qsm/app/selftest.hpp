#pragma once

// Property checks shared by `qsm selftest` and the acceptance binary. Each
// check counts cases and discrepancies against an independent oracle.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qsm::app {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;
  double seconds = 0.0;
};

struct SelftestOptions {
  std::uint64_t seed = 0x5EED;
  /// Builds the Shift-And masks from the pattern shifted by one position.
  bool inject_mask_fault = false;
};

CheckResult check_classical_equivalence(const SelftestOptions& options);
CheckResult check_cross_simulator(const SelftestOptions& options);
CheckResult check_grover_exactness(const SelftestOptions& options);

/// Criteria 2, 3 and 4: QSAnd and QSAdd against the classical traces, plus the
/// uncompute checks collected during the same runs.
std::vector<CheckResult> check_circuit_equivalence(const SelftestOptions& options);

/// Criteria 1 to 6 in order.
std::vector<CheckResult> run_selftest(const SelftestOptions& options);

CheckResult check_end_to_end(std::uint64_t seed, std::size_t planted = 500, std::size_t absent = 500);
CheckResult check_block_coverage(std::size_t max_n = 64);

struct ScalingFit {
  double qsand_full = 0.0;
  double proc_a = 0.0;
  double proc_b = 0.0;
};
ScalingFit depth_scaling_slopes(std::size_t min_exp = 10, std::size_t max_exp = 22);

}  // namespace qsm::app
