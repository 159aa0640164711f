#include "qsm/qcore/basis_sim.hpp"

#include <algorithm>
#include <string>

#include "qsm/errors.hpp"

namespace qsm {

std::uint64_t BasisState::value(std::span<const Qubit> qubits) const {
  if (qubits.size() > 64) throw DomainError("register too wide for a 64-bit value");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    v |= static_cast<std::uint64_t>(bits_.at(qubits[i])) << i;
  }
  return v;
}

std::uint64_t BasisState::value(const Register& reg) const { return value(reg.qubits()); }

void BasisState::set_value(std::span<const Qubit> qubits, std::uint64_t v) {
  if (qubits.size() > 64) throw DomainError("register too wide for a 64-bit value");
  for (std::size_t i = 0; i < qubits.size(); ++i) bits_.at(qubits[i]) = (v >> i) & 1U;
}

void BasisState::set_value(const Register& reg, std::uint64_t v) { set_value(reg.qubits(), v); }

bool BasisState::all_zero(const Register& reg) const {
  for (std::size_t i = 0; i < reg.size; ++i) {
    if (bits_.at(reg[i])) return false;
  }
  return true;
}

std::uint64_t BasisState::to_index() const {
  if (bits_.size() > 64) throw DomainError("state too wide for a 64-bit index");
  std::uint64_t idx = 0;
  for (std::size_t q = 0; q < bits_.size(); ++q) idx |= static_cast<std::uint64_t>(bits_[q]) << q;
  return idx;
}

BasisState BasisState::from_index(std::size_t qubits, std::uint64_t index) {
  BasisState s(qubits);
  for (std::size_t q = 0; q < qubits && q < 64; ++q) s.bits_[q] = (index >> q) & 1U;
  return s;
}

namespace {

bool all_set(const BasisState& s, const std::vector<Qubit>& qs) {
  return std::all_of(qs.begin(), qs.end(), [&](Qubit q) { return s.bit(q); });
}

std::uint64_t width_mask(std::size_t w) {
  return w >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
}

}  // namespace

void BasisSimulator::apply(const GateOp& g, std::size_t index) {
  BasisState& s = state_;
  switch (g.kind) {
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX:
      if (all_set(s, g.controls)) s.flip(g.targets[0]);
      break;
    case GateKind::SWAP: {
      const bool a = s.bit(g.targets[0]);
      s.set_bit(g.targets[0], s.bit(g.targets[1]));
      s.set_bit(g.targets[1], a);
      break;
    }
    case GateKind::ROTATE: {
      const std::size_t w = g.targets.size();
      std::vector<bool> old(w);
      for (std::size_t p = 0; p < w; ++p) old[p] = s.bit(g.targets[p]);
      for (std::size_t p = 0; p < w; ++p) s.set_bit(g.targets[(p + g.param) % w], old[p]);
      break;
    }
    case GateKind::QRAM_FETCH: {
      const std::uint64_t addr = s.value(g.sources);
      if (addr < g.table->size()) {
        s.set_value(g.targets, s.value(g.targets) ^ (*g.table)[addr]);
      }
      break;
    }
    case GateKind::COMPARE_LEQ: {
      const std::uint64_t v = s.value(g.sources);
      const std::uint64_t bound = g.bound.empty() ? g.param : s.value(g.bound);
      if (v <= bound) s.flip(g.targets[0]);
      break;
    }
    case GateKind::INCREMENT:
      if (all_set(s, g.controls)) {
        s.set_value(g.targets, (s.value(g.targets) + 1) & width_mask(g.targets.size()));
      }
      break;
    case GateKind::GEN_OR:
      if (std::any_of(g.sources.begin(), g.sources.end(), [&](Qubit q) { return s.bit(q); })) {
        s.flip(g.targets[0]);
      }
      break;
    case GateKind::H:
    case GateKind::Z:
    case GateKind::PHASE_FLIP_IF:
      throw NonClassicalGateError(index, std::string(to_string(g.kind)));
  }
}

void BasisSimulator::run(const Circuit& circuit, std::size_t first, std::size_t last) {
  const auto& gates = circuit.gates();
  for (std::size_t i = first; i < last && i < gates.size(); ++i) apply(gates[i], i);
}

BasisState run_basis(const Circuit& circuit, BasisState input) {
  if (input.num_qubits() != circuit.num_qubits()) {
    throw DomainError("basis input has " + std::to_string(input.num_qubits()) +
                      " qubits, circuit has " + std::to_string(circuit.num_qubits()));
  }
  BasisSimulator sim(std::move(input));
  sim.run(circuit, 0, circuit.size());
  return sim.state();
}

}  // namespace qsm
