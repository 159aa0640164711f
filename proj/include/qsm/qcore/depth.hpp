#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "qsm/qcore/circuit.hpp"

namespace qsm {

/// ceil(log2(x)) for x >= 1; 0 for x <= 1.
std::size_t ceil_log2(std::uint64_t x);

enum class RotateCost { constant, logarithmic };

/// Layer cost of each gate kind.
///   1/2/3-qubit gates      c_1q / c_2q / c_3q
///   MCX, q controls        ceil(log2(max(q, 2)))
///   ROTATE                 c_rot, or ceil(log2 width) in logarithmic mode
///   INCREMENT, width q     q * ceil(log2(max(q, 2)))
///   COMPARE_LEQ, width q   q
///   QRAM_FETCH, N cells    ceil(log2 N)
///   GEN_OR, q sources      ceil(log2(max(q, 2))) + 2
/// Every weight is at least 1.
struct DepthModel {
  std::size_t c_1q = 1;
  std::size_t c_2q = 1;
  std::size_t c_3q = 1;
  std::size_t c_rot = 2;
  RotateCost rotate = RotateCost::constant;

  std::size_t weight(const GateOp& gate) const;

  std::size_t mcx(std::size_t controls) const;
  std::size_t rotate_cost(std::size_t width) const;
  std::size_t increment(std::size_t width) const;
  std::size_t compare(std::size_t width) const;
  std::size_t qram(std::size_t cells) const;
  std::size_t gen_or(std::size_t sources) const;
};

inline constexpr std::size_t kPhaseCount = 8;

struct DepthSchedule {
  std::size_t total = 0;
  /// Layers by which each phase extended the running circuit depth; sums to total.
  std::array<std::size_t, kPhaseCount> by_phase{};

  std::size_t phase(Phase p) const { return by_phase[static_cast<std::size_t>(p)]; }
};

/// ASAP layering: each gate starts once all of its operands are free and
/// occupies them for its weight.
DepthSchedule schedule_depth(const Circuit& circuit, const DepthModel& model);
std::size_t circuit_depth(const Circuit& circuit, const DepthModel& model);

}  // namespace qsm
