#include "qsm/qcore/gate_list.hpp"

#include <map>
#include <ostream>
#include <sstream>

namespace qsm {

namespace {

void write_qubits(std::ostream& out, const char* key, const std::vector<Qubit>& qs) {
  if (qs.empty()) return;
  out << ' ' << key << '=';
  for (std::size_t i = 0; i < qs.size(); ++i) out << (i ? "," : "") << qs[i];
}

}  // namespace

void write_gate_list(std::ostream& out, const Circuit& circuit) {
  out << "qsm-gates 1\n";
  out << "qubits " << circuit.num_qubits() << '\n';
  for (const Register& r : circuit.layout().registers()) {
    out << "register " << r.name << ' ' << r.offset << ' ' << r.size << '\n';
  }

  std::map<const std::vector<std::uint64_t>*, std::size_t> table_ids;
  for (const GateOp& g : circuit.gates()) {
    if (!g.table || table_ids.count(g.table.get())) continue;
    const std::size_t id = table_ids.size();
    table_ids.emplace(g.table.get(), id);
    out << "table " << id << ' ' << g.table->size();
    for (std::uint64_t v : *g.table) out << ' ' << v;
    out << '\n';
  }

  for (const GateOp& g : circuit.gates()) {
    out << to_string(g.kind);
    write_qubits(out, "c", g.controls);
    write_qubits(out, "t", g.targets);
    write_qubits(out, "s", g.sources);
    write_qubits(out, "b", g.bound);
    if (g.kind == GateKind::ROTATE || (g.kind == GateKind::COMPARE_LEQ && g.bound.empty())) {
      out << " p=" << g.param;
    }
    if (g.table) out << " tab=" << table_ids.at(g.table.get());
    if (g.predicate) out << " pred";
    out << " ph=" << to_string(g.phase) << '\n';
  }
}

std::string to_gate_list(const Circuit& circuit) {
  std::ostringstream out;
  write_gate_list(out, circuit);
  return out.str();
}

}  // namespace qsm
