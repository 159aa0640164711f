#include <algorithm>
#include <string>

#include "qsm/errors.hpp"
#include "qsm/qcore/circuit.hpp"

namespace qsm {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::Z: return "Z";
    case GateKind::CX: return "CX";
    case GateKind::CCX: return "CCX";
    case GateKind::MCX: return "MCX";
    case GateKind::SWAP: return "SWAP";
    case GateKind::ROTATE: return "ROTATE";
    case GateKind::QRAM_FETCH: return "QRAM_FETCH";
    case GateKind::COMPARE_LEQ: return "COMPARE_LEQ";
    case GateKind::INCREMENT: return "INCREMENT";
    case GateKind::GEN_OR: return "GEN_OR";
    case GateKind::PHASE_FLIP_IF: return "PHASE_FLIP_IF";
  }
  return "?";
}

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::init: return "init";
    case Phase::fetch: return "fetch";
    case Phase::transition: return "transition";
    case Phase::rotate: return "rotate";
    case Phase::advance: return "advance";
    case Phase::readout: return "readout";
    case Phase::diffusion: return "diffusion";
    case Phase::other: return "other";
  }
  return "?";
}

std::vector<Qubit> GateOp::operands() const {
  std::vector<Qubit> all;
  all.reserve(controls.size() + targets.size() + sources.size() + bound.size());
  all.insert(all.end(), controls.begin(), controls.end());
  all.insert(all.end(), sources.begin(), sources.end());
  all.insert(all.end(), bound.begin(), bound.end());
  all.insert(all.end(), targets.begin(), targets.end());
  return all;
}

bool GateOp::is_classical() const noexcept {
  return kind != GateKind::H && kind != GateKind::Z && kind != GateKind::PHASE_FLIP_IF;
}

bool GateOp::is_macro() const noexcept {
  switch (kind) {
    case GateKind::ROTATE:
    case GateKind::QRAM_FETCH:
    case GateKind::COMPARE_LEQ:
    case GateKind::INCREMENT:
    case GateKind::GEN_OR:
      return true;
    default:
      return false;
  }
}

namespace {

GateOp single(GateKind kind, Qubit target) {
  GateOp g;
  g.kind = kind;
  g.targets = {target};
  return g;
}

std::vector<Qubit> to_vector(std::span<const Qubit> qs) { return {qs.begin(), qs.end()}; }

}  // namespace

GateOp x_gate(Qubit target) { return single(GateKind::X, target); }
GateOp h_gate(Qubit target) { return single(GateKind::H, target); }

GateOp z_gate(Qubit target, std::vector<Qubit> controls) {
  GateOp g = single(GateKind::Z, target);
  g.controls = std::move(controls);
  return g;
}

GateOp cx_gate(Qubit control, Qubit target) {
  GateOp g = single(GateKind::CX, target);
  g.controls = {control};
  return g;
}

GateOp ccx_gate(Qubit control_a, Qubit control_b, Qubit target) {
  GateOp g = single(GateKind::CCX, target);
  g.controls = {control_a, control_b};
  return g;
}

GateOp swap_gate(Qubit a, Qubit b) {
  GateOp g;
  g.kind = GateKind::SWAP;
  g.targets = {a, b};
  return g;
}

GateOp build_mcx(std::vector<Qubit> controls, Qubit target) {
  if (std::find(controls.begin(), controls.end(), target) != controls.end()) {
    throw DomainError("MCX target " + std::to_string(target) + " is also a control");
  }
  GateOp g = single(GateKind::MCX, target);
  g.controls = std::move(controls);
  return g;
}

GateOp build_rotate(std::span<const Qubit> reg, std::size_t offset) {
  if (reg.empty()) throw DomainError("cannot rotate an empty register");
  GateOp g;
  g.kind = GateKind::ROTATE;
  g.targets = to_vector(reg);
  g.param = offset % reg.size();
  return g;
}

GateOp qram_fetch_op(std::span<const Qubit> address, std::span<const Qubit> data,
                     std::shared_ptr<const std::vector<std::uint64_t>> table) {
  if (!table) throw DomainError("QRAM fetch needs a table");
  if (address.size() > 63 || data.size() > 64) throw DomainError("QRAM register too wide");
  if (table->size() > (std::uint64_t{1} << address.size())) {
    throw DomainError("QRAM table has more cells than the address register can reach");
  }
  if (data.size() < 64) {
    for (std::uint64_t v : *table) {
      if (v >> data.size()) throw DomainError("QRAM cell does not fit the data register");
    }
  }
  GateOp g;
  g.kind = GateKind::QRAM_FETCH;
  g.sources = to_vector(address);
  g.targets = to_vector(data);
  g.table = std::move(table);
  return g;
}

GateOp increment_op(std::span<const Qubit> reg, std::vector<Qubit> controls) {
  if (reg.empty() || reg.size() > 64) throw DomainError("increment width must be 1..64");
  GateOp g;
  g.kind = GateKind::INCREMENT;
  g.targets = to_vector(reg);
  g.controls = std::move(controls);
  return g;
}

GateOp compare_leq_op(std::span<const Qubit> value, std::uint64_t k, Qubit flag) {
  if (value.empty() || value.size() > 63) throw DomainError("compare width must be 1..63");
  if (k >> value.size()) throw DomainError("compare constant does not fit the register");
  GateOp g;
  g.kind = GateKind::COMPARE_LEQ;
  g.sources = to_vector(value);
  g.targets = {flag};
  g.param = k;
  return g;
}

GateOp compare_leq_op(std::span<const Qubit> value, std::span<const Qubit> bound, Qubit flag) {
  if (value.empty() || value.size() > 63) throw DomainError("compare width must be 1..63");
  if (bound.size() != value.size()) throw DomainError("compare registers must have equal width");
  GateOp g;
  g.kind = GateKind::COMPARE_LEQ;
  g.sources = to_vector(value);
  g.bound = to_vector(bound);
  g.targets = {flag};
  return g;
}

GateOp gen_or_op(std::span<const Qubit> sources, Qubit target) {
  if (sources.empty()) throw DomainError("generalized OR needs at least one source");
  GateOp g;
  g.kind = GateKind::GEN_OR;
  g.sources = to_vector(sources);
  g.targets = {target};
  return g;
}

GateOp phase_flip_if(std::span<const Qubit> reg, PhasePredicate predicate) {
  if (reg.empty() || reg.size() > 30) throw DomainError("phase oracle register must be 1..30 wide");
  GateOp g;
  g.kind = GateKind::PHASE_FLIP_IF;
  g.targets = to_vector(reg);
  g.predicate = std::make_shared<const PhasePredicate>(std::move(predicate));
  return g;
}

void Circuit::add(GateOp gate) {
  auto ops = gate.operands();
  const std::size_t q = num_qubits();
  for (Qubit op : ops) {
    if (op >= q) {
      throw DomainError(std::string(to_string(gate.kind)) + " operand " + std::to_string(op) +
                        " outside " + std::to_string(q) + "-qubit layout");
    }
  }
  std::sort(ops.begin(), ops.end());
  if (std::adjacent_find(ops.begin(), ops.end()) != ops.end()) {
    throw DomainError(std::string(to_string(gate.kind)) + " has a repeated operand");
  }
  if (gate.targets.empty()) throw DomainError("gate without targets");
  gates_.push_back(std::move(gate));
}

void Circuit::add(std::vector<GateOp> gates) {
  for (auto& g : gates) add(std::move(g));
}

Circuit expanded(const Circuit& circuit) {
  Circuit out(circuit.layout());
  for (const GateOp& g : circuit.gates()) out.add(expand(g));
  return out;
}

}  // namespace qsm
