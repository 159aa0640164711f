#include "qsm/qcore/depth.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace qsm {

std::size_t ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(x - 1));
}

namespace {
std::size_t at_least_one(std::size_t v) { return std::max<std::size_t>(v, 1); }
}  // namespace

std::size_t DepthModel::mcx(std::size_t controls) const {
  return at_least_one(ceil_log2(std::max<std::size_t>(controls, 2)));
}

std::size_t DepthModel::rotate_cost(std::size_t width) const {
  return rotate == RotateCost::constant ? at_least_one(c_rot) : at_least_one(ceil_log2(width));
}

std::size_t DepthModel::increment(std::size_t width) const {
  return at_least_one(width * ceil_log2(std::max<std::size_t>(width, 2)));
}

std::size_t DepthModel::compare(std::size_t width) const { return at_least_one(width); }

std::size_t DepthModel::qram(std::size_t cells) const { return at_least_one(ceil_log2(cells)); }

std::size_t DepthModel::gen_or(std::size_t sources) const {
  return ceil_log2(std::max<std::size_t>(sources, 2)) + 2;
}

std::size_t DepthModel::weight(const GateOp& g) const {
  switch (g.kind) {
    case GateKind::X:
    case GateKind::H:
      return at_least_one(c_1q);
    case GateKind::Z:
      if (g.controls.empty()) return at_least_one(c_1q);
      if (g.controls.size() == 1) return at_least_one(c_2q);
      if (g.controls.size() == 2) return at_least_one(c_3q);
      return mcx(g.controls.size());
    case GateKind::CX:
    case GateKind::SWAP:
      return at_least_one(c_2q);
    case GateKind::CCX:
      return at_least_one(c_3q);
    case GateKind::MCX:
      return mcx(g.controls.size());
    case GateKind::ROTATE:
      return rotate_cost(g.targets.size());
    case GateKind::QRAM_FETCH:
      return qram(g.table ? g.table->size() : 1);
    case GateKind::COMPARE_LEQ:
      return compare(g.sources.size());
    case GateKind::INCREMENT:
      return increment(g.targets.size());
    case GateKind::GEN_OR:
      return gen_or(g.sources.size());
    case GateKind::PHASE_FLIP_IF:
      return 1;
  }
  return 1;
}

DepthSchedule schedule_depth(const Circuit& circuit, const DepthModel& model) {
  std::vector<std::size_t> ready(circuit.num_qubits(), 0);
  DepthSchedule out;
  for (const GateOp& g : circuit.gates()) {
    const auto ops = g.operands();
    std::size_t start = 0;
    for (Qubit q : ops) start = std::max(start, ready[q]);
    const std::size_t end = start + model.weight(g);
    for (Qubit q : ops) ready[q] = end;
    if (end > out.total) {
      out.by_phase[static_cast<std::size_t>(g.phase)] += end - out.total;
      out.total = end;
    }
  }
  return out;
}

std::size_t circuit_depth(const Circuit& circuit, const DepthModel& model) {
  return schedule_depth(circuit, model).total;
}

}  // namespace qsm
